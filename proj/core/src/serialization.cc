// Copyright 2026 The Walshpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walshpulse/serialization.h"

#include <array>
#include <cstdio>

#include "json.hpp"

namespace walshpulse {

using ojson = nlohmann::ordered_json;

namespace {

ojson gate_to_json(const SingleQubitGate &g) {
    std::string label = g.label();
    if (!label.empty()) {
        return label;
    }
    return ojson::array({g.w(), g.x(), g.y(), g.z()});
}

SingleQubitGate gate_from_json(const ojson &j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "H") {
            return SingleQubitGate::hadamard();
        }
        if (s.size() == 1) {
            return SingleQubitGate::pauli(pauli_from_char(s[0]));
        }
        throw ParseError("unknown gate label '" + s + "'");
    }
    if (j.is_array() && j.size() == 4) {
        return SingleQubitGate::from_quaternion(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
    }
    throw ParseError("gate must be a label or a [w, x, y, z] quaternion");
}

Axis axis_from_json(const ojson &j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s.size() != 1 || (s[0] != 'X' && s[0] != 'Y' && s[0] != 'Z')) {
            throw ParseError("operator label must be X, Y or Z, got '" + s + "'");
        }
        return Axis::of(pauli_from_char(s[0]));
    }
    if (j.is_array() && j.size() == 3) {
        return Axis{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()}.normalized();
    }
    throw ParseError("operator must be a Pauli label or an [x, y, z] axis");
}

ojson axis_to_json(const Axis &a) {
    if (auto p = a.as_pauli()) {
        return std::string(1, pauli_char(*p));
    }
    return ojson::array({a.x, a.y, a.z});
}

ojson parse(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename F>
auto with_json_errors(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("bad document: ") + e.what());
    }
}

std::vector<double> matrix_from_json(const ojson &rows, int n, const char *name) {
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
        throw ParseError(std::string(name) + " must have N rows");
    }
    std::vector<double> m;
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ParseError(std::string(name) + " rows must have N entries");
        }
        for (const auto &v : row) {
            m.push_back(v.get<double>());
        }
    }
    return m;
}

}  // namespace

std::string schedule_to_json(const PulseSchedule &schedule) {
    ojson doc;
    doc["version"] = kScheduleFormatVersion;
    doc["n_qubits"] = schedule.n_qubits;
    doc["trotter_order"] = schedule.trotter_order;
    ojson blocks = ojson::array();
    for (const auto &b : schedule.blocks) {
        ojson jb;
        jb["c_q"] = b.c;
        jb["x"] = b.assignment.x;
        jb["y"] = b.assignment.y;
        jb["interval_durations"] = b.interval_durations;
        ojson pre = ojson::array();
        ojson post = ojson::array();
        for (const auto &g : b.set_pre) {
            pre.push_back(gate_to_json(g));
        }
        for (const auto &g : b.set_post) {
            post.push_back(gate_to_json(g));
        }
        jb["set_pre"] = pre;
        jb["set_post"] = post;
        blocks.push_back(jb);
    }
    doc["blocks"] = blocks;
    doc["sign_e"] = schedule.sign_e;
    if (schedule.fp_deformation) {
        doc["fp_deformation"] = {{"shrink", schedule.fp_deformation->shrink}, {"rescale", schedule.fp_deformation->rescale}};
    } else {
        doc["fp_deformation"] = nullptr;
    }
    return doc.dump(1) + "\n";
}

PulseSchedule schedule_from_json(std::string_view text) {
    ojson doc = parse(text);
    PulseSchedule s = with_json_errors([&] {
        PulseSchedule s;
        int version = doc.at("version").get<int>();
        if (version != kScheduleFormatVersion) {
            throw ParseError("unsupported schedule version " + std::to_string(version));
        }
        s.n_qubits = doc.at("n_qubits").get<int>();
        s.trotter_order = doc.at("trotter_order").get<int>();
        for (const auto &jb : doc.at("blocks")) {
            WalshBlock b;
            b.c = jb.at("c_q").get<double>();
            b.assignment.x = jb.at("x").get<std::vector<std::uint32_t>>();
            b.assignment.y = jb.at("y").get<std::vector<std::uint32_t>>();
            b.interval_durations = jb.at("interval_durations").get<std::vector<double>>();
            for (const auto &g : jb.at("set_pre")) {
                b.set_pre.push_back(gate_from_json(g));
            }
            for (const auto &g : jb.at("set_post")) {
                b.set_post.push_back(gate_from_json(g));
            }
            s.blocks.push_back(std::move(b));
        }
        s.sign_e = doc.at("sign_e").get<std::vector<std::uint32_t>>();
        const auto &fp = doc.at("fp_deformation");
        if (!fp.is_null()) {
            s.fp_deformation = FpDeformation{fp.at("shrink").get<double>(), fp.at("rescale").get<double>()};
        }
        return s;
    });
    try {
        s.validate();
    } catch (const ParseError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    return s;
}

TargetSpec target_from_json(std::string_view text) {
    ojson doc = parse(text);
    TargetSpec t = with_json_errors([&] {
        if (doc.contains("ising_chain")) {
            const auto &g = doc["ising_chain"];
            return ising_chain_target(g.at("n_qubits").get<int>(), g.value("j", 1.0));
        }
        TargetSpec t;
        t.n_qubits = doc.at("n_qubits").get<int>();
        for (const auto &jt : doc.at("terms")) {
            TargetTerm term;
            term.i = jt.at("i").get<int>();
            term.j = jt.at("j").get<int>();
            const auto &ops = jt.at("ops");
            if (!ops.is_array() || ops.size() != 2) {
                throw ParseError("each term needs two operators");
            }
            term.op_i = axis_from_json(ops[0]);
            term.op_j = axis_from_json(ops[1]);
            term.strength = jt.at("strength").get<double>();
            t.terms.push_back(term);
        }
        return t;
    });
    try {
        t.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    return t;
}

std::string target_to_json(const TargetSpec &target) {
    ojson doc;
    doc["n_qubits"] = target.n_qubits;
    ojson terms = ojson::array();
    for (const auto &t : target.terms) {
        terms.push_back({{"i", t.i}, {"j", t.j}, {"ops", {axis_to_json(t.op_i), axis_to_json(t.op_j)}}, {"strength", t.strength}});
    }
    doc["terms"] = terms;
    return doc.dump(1) + "\n";
}

ResourceHamiltonian resource_from_json(std::string_view text) {
    ojson doc = parse(text);
    return with_json_errors([&] {
        try {
            if (doc.contains("power_law")) {
                const auto &g = doc["power_law"];
                double alpha = g.at("alpha").get<double>();
                double j = g.value("j", 1.0);
                bool ising = g.value("ising", false);
                ResourceHamiltonian r;
                if (g.contains("positions")) {
                    auto pos = g["positions"].get<std::vector<std::array<double, 2>>>();
                    r = ResourceHamiltonian::power_law(pos, alpha, j, ising);
                } else {
                    r = ResourceHamiltonian::power_law_chain(g.at("n_qubits").get<int>(), alpha, j, ising);
                }
                if (doc.contains("fields")) {
                    std::vector<LocalField> fields;
                    for (const auto &f : doc["fields"]) {
                        fields.push_back({f.at(0).get<double>(), f.at(1).get<double>(), f.at(2).get<double>()});
                    }
                    r = r.with_fields(std::move(fields));
                }
                return r;
            }
            int n = doc.at("n_qubits").get<int>();
            auto jx = matrix_from_json(doc.at("jx"), n, "jx");
            auto jy = matrix_from_json(doc.at("jy"), n, "jy");
            std::vector<LocalField> fields;
            if (doc.contains("fields")) {
                for (const auto &f : doc["fields"]) {
                    fields.push_back({f.at(0).get<double>(), f.at(1).get<double>(), f.at(2).get<double>()});
                }
            }
            return ResourceHamiltonian(n, std::move(jx), std::move(jy), std::move(fields));
        } catch (const ParseError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
    });
}

std::string resource_to_json(const ResourceHamiltonian &r) {
    int n = r.n_qubits();
    ojson doc;
    doc["n_qubits"] = n;
    for (auto [name, m] : {std::pair{"jx", &r.jx_matrix()}, std::pair{"jy", &r.jy_matrix()}}) {
        ojson rows = ojson::array();
        for (int i = 0; i < n; i++) {
            rows.push_back(std::vector<double>(m->begin() + i * n, m->begin() + (i + 1) * n));
        }
        doc[name] = rows;
    }
    if (!r.fields().empty()) {
        ojson fields = ojson::array();
        for (const auto &f : r.fields()) {
            fields.push_back({f.hx, f.hy, f.hz});
        }
        doc["fields"] = fields;
    }
    return doc.dump(1) + "\n";
}

std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace walshpulse
