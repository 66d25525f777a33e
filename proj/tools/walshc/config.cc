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

#include "walshc/config.h"

#include <json.hpp>
#include <set>

#include "walshpulse/serialization.h"

namespace walshc {

namespace {

using nlohmann::json;
using walshpulse::ParseError;

void check_keys(const json &table, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!table.is_object()) {
        throw ParseError("config: '" + where + "' must be a table");
    }
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &[key, value] : table.items()) {
        if (!ok.count(key)) {
            throw ParseError("config: unknown key '" + key + "' in '" + where + "'");
        }
    }
}

template <typename T>
void read(const json &table, const char *key, T &out) {
    if (!table.contains(key)) {
        return;
    }
    try {
        out = table.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ParseError(std::string("config: bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

ConfigFile apply_config_json(std::string_view text, walshpulse::ExperimentConfig &c) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    check_keys(doc, "<root>", {"experiment", "grid", "robust", "cutoff", "surface7", "maxcut", "bounds", "run", "output"});
    ConfigFile file;
    if (doc.contains("experiment")) {
        std::string name;
        read(doc, "experiment", name);
        file.experiment = name;
    }
    if (doc.contains("grid")) {
        const auto &g = doc["grid"];
        check_keys(g, "grid", {"N", "alpha", "p", "tau_over_n", "seed"});
        read(g, "N", c.n_values);
        read(g, "alpha", c.alphas);
        read(g, "p", c.orders);
        read(g, "tau_over_n", c.tau_over_n);
        read(g, "seed", c.seeds);
    }
    if (doc.contains("robust")) {
        const auto &r = doc["robust"];
        check_keys(r, "robust", {"mode", "eps_ra", "eps_fp", "field_strength"});
        read(r, "mode", c.mode);
        read(r, "eps_ra", c.eps_ra);
        read(r, "eps_fp", c.eps_fp);
        read(r, "field_strength", c.field_strength);
    }
    if (doc.contains("cutoff")) {
        check_keys(doc["cutoff"], "cutoff", {"lambda"});
        read(doc["cutoff"], "lambda", c.lambdas);
    }
    if (doc.contains("surface7")) {
        const auto &s = doc["surface7"];
        check_keys(s, "surface7", {"geometry", "n_states"});
        read(s, "geometry", c.geometry);
        read(s, "n_states", c.n_states);
    }
    if (doc.contains("maxcut")) {
        const auto &m = doc["maxcut"];
        check_keys(m, "maxcut", {"graph", "k_steps", "k_tau"});
        read(m, "graph", c.graph);
        read(m, "k_steps", c.k_steps);
        read(m, "k_tau", c.k_tau);
    }
    if (doc.contains("bounds")) {
        check_keys(doc["bounds"], "bounds", {"kappa"});
        read(doc["bounds"], "kappa", c.kappa);
    }
    if (doc.contains("run")) {
        const auto &r = doc["run"];
        check_keys(r, "run", {"total_time", "tol", "workers"});
        read(r, "total_time", c.total_time);
        read(r, "tol", c.tol);
        read(r, "workers", c.workers);
    }
    if (doc.contains("output")) {
        const auto &o = doc["output"];
        check_keys(o, "output", {"csv", "manifest"});
        if (o.contains("csv")) {
            std::string p;
            read(o, "csv", p);
            file.csv_path = p;
        }
        if (o.contains("manifest")) {
            std::string p;
            read(o, "manifest", p);
            file.manifest_path = p;
        }
    }
    return file;
}

std::string config_to_json(const walshpulse::ExperimentConfig &c) {
    nlohmann::ordered_json doc;
    doc["grid"] = {{"N", c.n_values}, {"alpha", c.alphas}, {"p", c.orders}, {"tau_over_n", c.tau_over_n},
                   {"seed", c.seeds}};
    doc["robust"] = {{"mode", c.mode}, {"eps_ra", c.eps_ra}, {"eps_fp", c.eps_fp}, {"field_strength", c.field_strength}};
    doc["cutoff"] = {{"lambda", c.lambdas}};
    doc["surface7"] = {{"geometry", c.geometry}, {"n_states", c.n_states}};
    doc["maxcut"] = {{"graph", c.graph}, {"k_steps", c.k_steps}, {"k_tau", c.k_tau}};
    doc["bounds"] = {{"kappa", c.kappa}};
    // Worker count is left out: it never changes results.
    doc["run"] = {{"total_time", c.total_time}, {"tol", c.tol}};
    return doc.dump(1);
}

}  // namespace walshc
