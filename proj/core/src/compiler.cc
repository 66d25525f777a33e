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

#include "walshpulse/compiler.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace walshpulse {

namespace {

constexpr double kAxisTolerance = 1e-12;

// Flips the axis so its first significant component is positive; returns the
// sign that was absorbed.
double canonical_axis(Axis &a) {
    for (double c : {a.x, a.y, a.z}) {
        if (std::abs(c) > kAxisTolerance) {
            if (c < 0) {
                a = -a;
                return -1;
            }
            return 1;
        }
    }
    throw std::invalid_argument("zero operator axis");
}

Axis snap(const Axis &a) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (a.approx_equal(Axis::of(p), 1e-9)) {
            return Axis::of(p);
        }
    }
    return a;
}

struct ClassKey {
    Axis a;
    Axis b;
    Pauli channel;

    bool core() const {
        Axis ch = Axis::of(channel);
        return a.approx_equal(ch, kAxisTolerance) && b.approx_equal(ch, kAxisTolerance);
    }
    auto tie() const {
        return std::tuple{a.x, a.y, a.z, b.x, b.y, b.z, static_cast<int>(channel)};
    }
    bool operator<(const ClassKey &o) const {
        return tie() < o.tie();
    }
};

struct InteractionClass {
    ClassKey key;
    std::map<std::pair<int, int>, double> strengths;
};

// Groups terms by (operator pair, resource channel) and sums duplicates.
std::vector<InteractionClass> classify(const TargetSpec &target, const ResourceHamiltonian &resource) {
    target.validate();
    if (target.n_qubits != resource.n_qubits()) {
        throw std::invalid_argument("target and resource qubit counts differ");
    }
    std::map<ClassKey, InteractionClass> classes;
    for (const auto &t : target.terms) {
        if (t.strength == 0) {
            continue;
        }
        Axis a = snap(t.op_i.normalized());
        Axis b = snap(t.op_j.normalized());
        double s = t.strength * canonical_axis(a) * canonical_axis(b);
        Pauli channel;
        auto pa = a.as_pauli();
        auto pb = b.as_pauli();
        if (pa && pb && *pa == *pb && *pa != Pauli::Z) {
            channel = *pa;
            if (resource.coupling(channel, t.i, t.j) == 0) {
                throw DivisionByZeroCoupling(t.i, t.j, channel);
            }
        } else if (resource.jx(t.i, t.j) != 0) {
            channel = Pauli::X;
        } else if (resource.jy(t.i, t.j) != 0) {
            channel = Pauli::Y;
        } else {
            throw DivisionByZeroCoupling(t.i, t.j, Pauli::X);
        }
        ClassKey key{a, b, channel};
        auto &cls = classes[key];
        cls.key = key;
        cls.strengths[{t.i, t.j}] += s;
    }
    std::vector<InteractionClass> out;
    for (auto &[k, v] : classes) {
        out.push_back(std::move(v));
    }
    return out;
}

WeightedGraph class_graph(const InteractionClass &cls, const ResourceHamiltonian &resource) {
    WeightedGraph g(resource.n_qubits());
    for (auto [pair, s] : cls.strengths) {
        if (s == 0) {
            continue;
        }
        g.add_edge(pair.first, pair.second, s / resource.coupling(cls.key.channel, pair.first, pair.second));
    }
    return g;
}

// Connected components when every component is a clique, else nullopt.
std::optional<std::vector<int>> cluster_groups(const WeightedGraph &g) {
    int n = g.n_vertices();
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (const auto &e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    int next = 0;
    for (int v = 0; v < n; v++) {
        if (label[v] >= 0 || adj[v].empty()) {
            continue;
        }
        std::vector<int> comp{v};
        label[v] = next;
        for (std::size_t k = 0; k < comp.size(); k++) {
            for (int w : adj[comp[k]]) {
                if (label[w] < 0) {
                    label[w] = next;
                    comp.push_back(w);
                }
            }
        }
        for (int u : comp) {
            if (adj[u].size() + 1 != comp.size()) {
                return std::nullopt;
            }
        }
        next++;
    }
    return label;
}

// A set of edges of one class that a single Walsh sequence can carry.
struct Unit {
    ClassKey key;
    std::vector<Edge> edges;
    bool cluster = false;

    bool needs_frames() const {
        if (!key.core()) {
            return true;
        }
        return std::any_of(edges.begin(), edges.end(), [](const Edge &e) {
            return e.weight < 0;
        });
    }
};

std::vector<Unit> build_units(
    const std::vector<InteractionClass> &classes, const ResourceHamiltonian &resource, DecompositionStrategy strategy) {
    std::vector<Unit> units;
    int n = resource.n_qubits();
    for (const auto &cls : classes) {
        WeightedGraph g = class_graph(cls, resource);
        if (g.empty()) {
            continue;
        }
        if (cls.key.core()) {
            auto levels = weight_levels([&] {
                std::vector<double> w;
                for (const auto &e : g.edges()) {
                    w.push_back(std::abs(e.weight));
                }
                return w;
            }());
            bool positive = std::all_of(g.edges().begin(), g.edges().end(), [](const Edge &e) {
                return e.weight > 0;
            });
            if (levels.size() == 1 && positive && cluster_groups(g)) {
                units.push_back(Unit{cls.key, g.edges(), true});
                continue;
            }
        }
        std::vector<Matching> base = strategy == DecompositionStrategy::Greedy
                                         ? greedy_degree1(g)
                                         : restrict_matchings(g, complete_graph_matchings(n));
        for (const auto &m : base) {
            Unit u{cls.key, {}, false};
            for (auto [a, b] : m.pairs) {
                u.edges.push_back(Edge{a, b, *g.weight(a, b)});
            }
            units.push_back(std::move(u));
        }
    }
    return units;
}

bool can_merge(const Unit &x, const Unit &y, int n) {
    if (!x.needs_frames() && !y.needs_frames()) {
        return true;
    }
    if (x.cluster || y.cluster) {
        return false;
    }
    std::vector<int> px(n, -1);
    std::vector<int> py(n, -1);
    for (const auto &e : x.edges) {
        px[e.u] = e.v;
        px[e.v] = e.u;
    }
    for (const auto &e : y.edges) {
        py[e.u] = e.v;
        py[e.v] = e.u;
    }
    for (int v = 0; v < n; v++) {
        if (px[v] >= 0 && py[v] >= 0) {
            if (px[v] != py[v]) {
                return false;
            }
            if (!x.key.core() || !y.key.core()) {
                return false;
            }
        }
    }
    return true;
}

struct TaggedEdge {
    const Unit *unit;
    Edge edge;
};

SingleQubitGate frame_gate(Pauli channel, const Axis &target) {
    Axis from = Axis::of(channel);
    if (target.approx_equal(from, kAxisTolerance)) {
        return {};
    }
    if ((channel == Pauli::X && target.approx_equal(Axis::of(Pauli::Z), kAxisTolerance))) {
        return SingleQubitGate::hadamard();
    }
    return SingleQubitGate::mapping(from, target);
}

WalshBlock make_block(
    const std::vector<TaggedEdge> &edges, double c, int n, const CompileOptions &options) {
    std::vector<int> gx(n, -1);
    std::vector<int> gy(n, -1);
    int label = 0;
    std::map<const Unit *, int> cluster_offset;
    for (const auto &te : edges) {
        auto &groups = te.unit->key.channel == Pauli::X ? gx : gy;
        if (te.unit->cluster) {
            if (!cluster_offset.count(te.unit)) {
                cluster_offset[te.unit] = label;
                WeightedGraph g(n);
                for (const auto &e : te.unit->edges) {
                    g.add_edge(e.u, e.v, e.weight);
                }
                auto comp = *cluster_groups(g);
                int top = -1;
                for (int v = 0; v < n; v++) {
                    if (comp[v] >= 0) {
                        groups[v] = label + comp[v];
                        top = std::max(top, comp[v]);
                    }
                }
                label += top + 1;
            }
            continue;
        }
        groups[te.edge.u] = groups[te.edge.v] = label++;
    }

    WalshBlock block;
    block.c = c;
    bool guard = options.dd_guard || options.robust.has_value();
    block.assignment = assign_groups(gx, gy, options.cutoff);
    if (guard) {
        block.assignment = dd_guard(block.assignment);
    }
    std::size_t layers = sequence_length(block.assignment) * (options.trotter_order == 2 ? 2 : 1);
    block.interval_durations = uniform_intervals(layers);

    std::vector<SingleQubitGate> post(n);
    std::map<std::pair<int, int>, std::pair<bool, bool>> core_flips;
    for (const auto &te : edges) {
        const Unit &u = *te.unit;
        if (u.cluster) {
            continue;
        }
        const Edge &e = te.edge;
        if (u.key.core()) {
            auto &flip = core_flips[{e.u, e.v}];
            (u.key.channel == Pauli::X ? flip.first : flip.second) = e.weight < 0;
            continue;
        }
        double sign = e.weight < 0 ? -1 : 1;
        post[e.u] = frame_gate(u.key.channel, u.key.a * sign);
        post[e.v] = frame_gate(u.key.channel, u.key.b);
    }
    for (auto [pair, flip] : core_flips) {
        auto [neg_x, neg_y] = flip;
        if (neg_x || neg_y) {
            post[pair.first] = SingleQubitGate::pauli(neg_x && neg_y ? Pauli::Z : (neg_x ? Pauli::Y : Pauli::X));
        }
    }
    block.set_post = post;
    for (const auto &g : post) {
        block.set_pre.push_back(g.inverse());
    }
    return block;
}

}  // namespace

std::pair<WeightedGraph, WeightedGraph> rescaling_graph(const TargetSpec &target, const ResourceHamiltonian &resource) {
    WeightedGraph gx(resource.n_qubits());
    WeightedGraph gy(resource.n_qubits());
    for (const auto &cls : classify(target, resource)) {
        if (!cls.key.core()) {
            throw std::invalid_argument("rescaling graphs cover XX and YY terms only");
        }
        auto &g = cls.key.channel == Pauli::X ? gx : gy;
        WeightedGraph cg = class_graph(cls, resource);
        for (const auto &e : cg.edges()) {
            g.add_edge(e.u, e.v, e.weight);
        }
    }
    return {gx, gy};
}

PulseSchedule compile(const TargetSpec &target, const ResourceHamiltonian &resource, const CompileOptions &options) {
    if (options.trotter_order != 1 && options.trotter_order != 2) {
        throw std::invalid_argument("trotter order must be 1 or 2");
    }
    int n = resource.n_qubits();
    auto classes = classify(target, resource);
    auto units = build_units(classes, resource, options.strategy);

    std::vector<const Unit *> xs;
    std::vector<const Unit *> ys;
    for (const auto &u : units) {
        (u.key.channel == Pauli::X ? xs : ys).push_back(&u);
    }
    std::vector<std::vector<const Unit *>> merged;
    std::vector<bool> y_used(ys.size(), false);
    for (const Unit *x : xs) {
        std::vector<const Unit *> group{x};
        for (std::size_t k = 0; k < ys.size(); k++) {
            if (!y_used[k] && can_merge(*x, *ys[k], n)) {
                y_used[k] = true;
                group.push_back(ys[k]);
                break;
            }
        }
        merged.push_back(group);
    }
    for (std::size_t k = 0; k < ys.size(); k++) {
        if (!y_used[k]) {
            merged.push_back({ys[k]});
        }
    }

    PulseSchedule schedule;
    schedule.n_qubits = n;
    schedule.trotter_order = options.trotter_order;
    for (const auto &group : merged) {
        std::vector<TaggedEdge> all;
        std::vector<double> mags;
        for (const Unit *u : group) {
            for (const auto &e : u->edges) {
                all.push_back({u, e});
                mags.push_back(std::abs(e.weight));
            }
        }
        double previous = 0;
        for (double level : weight_levels(mags)) {
            std::vector<TaggedEdge> present;
            for (const auto &te : all) {
                if (std::abs(te.edge.weight) >= level - kWeightTolerance) {
                    present.push_back(te);
                }
            }
            schedule.blocks.push_back(make_block(present, level - previous, n, options));
            previous = level;
        }
    }
    if (schedule.blocks.empty()) {
        schedule.blocks.push_back(make_block({}, 1.0, n, options));
    }
    if (options.robust) {
        schedule = robustify(std::move(schedule), *options.robust);
    }
    schedule.validate();
    return schedule;
}

}  // namespace walshpulse
