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

#include "walshpulse/graphdecomp.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace walshpulse {

namespace {

std::string pair_text(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

WeightedGraph::WeightedGraph(int n_vertices) : n_(n_vertices) {
    if (n_vertices < 0) {
        throw std::invalid_argument("negative vertex count");
    }
}

void WeightedGraph::add_edge(int i, int j, double weight) {
    if (i > j) {
        std::swap(i, j);
    }
    if (i < 0 || j >= n_) {
        throw std::invalid_argument("edge " + pair_text(i, j) + " outside vertex range");
    }
    if (i == j) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(i));
    }
    if (!std::isfinite(weight) || weight == 0) {
        throw std::invalid_argument("edge " + pair_text(i, j) + " needs a finite nonzero weight");
    }
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{i, j}, [](const Edge &e, std::pair<int, int> key) {
        return std::pair{e.u, e.v} < key;
    });
    if (it != edges_.end() && it->u == i && it->v == j) {
        throw std::invalid_argument("duplicate edge " + pair_text(i, j));
    }
    edges_.insert(it, Edge{i, j, weight});
}

std::optional<double> WeightedGraph::weight(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    for (const auto &e : edges_) {
        if (e.u == i && e.v == j) {
            return e.weight;
        }
    }
    return std::nullopt;
}

int WeightedGraph::degree(int v) const {
    int d = 0;
    for (const auto &e : edges_) {
        d += (e.u == v) + (e.v == v);
    }
    return d;
}

int WeightedGraph::max_degree() const {
    std::vector<int> deg(n_, 0);
    for (const auto &e : edges_) {
        deg[e.u]++;
        deg[e.v]++;
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Matching::contains(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    return std::binary_search(pairs.begin(), pairs.end(), std::pair{i, j});
}

int Matching::partner(int v) const {
    for (auto [a, b] : pairs) {
        if (a == v) {
            return b;
        }
        if (b == v) {
            return a;
        }
    }
    return -1;
}

Matching make_matching(int n_vertices, std::vector<std::pair<int, int>> pairs) {
    std::vector<bool> used(n_vertices, false);
    for (auto &[a, b] : pairs) {
        if (a > b) {
            std::swap(a, b);
        }
        if (a < 0 || b >= n_vertices || a == b) {
            throw std::invalid_argument("invalid matching pair " + pair_text(a, b));
        }
        if (used[a] || used[b]) {
            throw std::invalid_argument("matching pairs share a vertex at " + pair_text(a, b));
        }
        used[a] = used[b] = true;
    }
    std::sort(pairs.begin(), pairs.end());
    return Matching{n_vertices, std::move(pairs)};
}

std::vector<Matching> greedy_degree1(const WeightedGraph &graph) {
    int n = graph.n_vertices();
    std::vector<std::set<int>> adj(n);
    std::size_t remaining = 0;
    for (const auto &e : graph.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
        remaining++;
    }

    std::vector<Matching> out;
    while (remaining > 0) {
        std::vector<bool> active(n, true);
        auto active_degree = [&](int v) {
            int d = 0;
            for (int w : adj[v]) {
                d += active[w];
            }
            return d;
        };
        std::vector<std::pair<int, int>> pairs;
        while (true) {
            int best_i = -1;
            int best_deg = 0;
            for (int v = 0; v < n; v++) {
                if (!active[v]) {
                    continue;
                }
                int d = active_degree(v);
                if (d > best_deg) {
                    best_deg = d;
                    best_i = v;
                }
            }
            if (best_i < 0) {
                break;
            }
            int best_j = -1;
            int best_j_deg = -1;
            for (int w : adj[best_i]) {
                if (!active[w]) {
                    continue;
                }
                int d = active_degree(w);
                if (d > best_j_deg) {
                    best_j_deg = d;
                    best_j = w;
                }
            }
            pairs.emplace_back(std::min(best_i, best_j), std::max(best_i, best_j));
            adj[best_i].erase(best_j);
            adj[best_j].erase(best_i);
            remaining--;
            active[best_i] = false;
            active[best_j] = false;
        }
        out.push_back(make_matching(n, std::move(pairs)));
    }
    return out;
}

std::vector<Matching> hamilton_path_decompose(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw std::invalid_argument("Hamilton path decomposition needs a positive even vertex count, got " + std::to_string(n));
    }
    std::vector<Matching> out;
    for (int q = 0; q < n / 2; q++) {
        std::vector<int> path(n);
        path[0] = q;
        for (int t = 1; t < n; t++) {
            int offset = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
            path[t] = ((q + offset) % n + n) % n;
        }
        std::vector<std::pair<int, int>> odd_links;
        std::vector<std::pair<int, int>> even_links;
        for (int l = 0; l + 1 < n; l++) {
            auto link = std::pair{std::min(path[l], path[l + 1]), std::max(path[l], path[l + 1])};
            (l % 2 == 0 ? odd_links : even_links).push_back(link);
        }
        for (auto *links : {&odd_links, &even_links}) {
            if (!links->empty()) {
                out.push_back(make_matching(n, std::move(*links)));
            }
        }
    }
    return out;
}

std::vector<Matching> complete_graph_matchings(int n) {
    if (n <= 0) {
        throw std::invalid_argument("complete graph needs at least one vertex");
    }
    if (n % 2 == 0) {
        return hamilton_path_decompose(n);
    }
    std::vector<Matching> out;
    for (const auto &m : hamilton_path_decompose(n + 1)) {
        std::vector<std::pair<int, int>> pairs;
        for (auto p : m.pairs) {
            if (p.second != n) {
                pairs.push_back(p);
            }
        }
        if (!pairs.empty()) {
            out.push_back(make_matching(n, std::move(pairs)));
        }
    }
    return out;
}

std::vector<Matching> restrict_matchings(const WeightedGraph &graph, std::span<const Matching> base) {
    std::vector<Matching> out;
    for (const auto &m : base) {
        std::vector<std::pair<int, int>> pairs;
        for (auto [a, b] : m.pairs) {
            if (graph.weight(a, b).has_value()) {
                pairs.emplace_back(a, b);
            }
        }
        if (!pairs.empty()) {
            out.push_back(make_matching(graph.n_vertices(), std::move(pairs)));
        }
    }
    return out;
}

std::vector<double> weight_levels(std::span<const double> magnitudes) {
    std::vector<double> sorted(magnitudes.begin(), magnitudes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> levels;
    for (double w : sorted) {
        if (levels.empty() || w - levels.back() > kWeightTolerance) {
            levels.push_back(w);
        }
    }
    return levels;
}

WeightedDecomposition weighted_decompose(const WeightedGraph &graph, std::span<const Matching> base) {
    std::map<std::pair<int, int>, int> seen;
    for (const auto &e : graph.edges()) {
        seen[{e.u, e.v}] = 0;
    }
    WeightedDecomposition out;
    for (const auto &m : base) {
        std::vector<double> mags;
        std::vector<Edge> edges;
        for (auto [a, b] : m.pairs) {
            auto w = graph.weight(a, b);
            if (!w) {
                throw std::invalid_argument("base matching edge " + pair_text(a, b) + " is not in the graph");
            }
            seen[{a, b}]++;
            edges.push_back(Edge{a, b, *w});
            mags.push_back(std::abs(*w));
        }
        std::vector<double> levels = weight_levels(mags);
        double previous = 0;
        for (double level : levels) {
            DecompositionTerm term;
            term.coefficient = level - previous;
            std::vector<std::pair<int, int>> pairs;
            for (const auto &e : edges) {
                if (std::abs(e.weight) >= level - kWeightTolerance) {
                    pairs.emplace_back(e.u, e.v);
                    if (e.weight < 0) {
                        term.negated.emplace_back(e.u, e.v);
                    }
                }
            }
            term.matching = make_matching(graph.n_vertices(), std::move(pairs));
            out.push_back(std::move(term));
            previous = level;
        }
    }
    for (const auto &[key, count] : seen) {
        if (count != 1) {
            throw std::invalid_argument(
                "edge " + pair_text(key.first, key.second) + " appears in " + std::to_string(count) +
                " base matchings (expected exactly one)");
        }
    }
    return out;
}

std::vector<double> reconstruct_weights(const WeightedDecomposition &decomposition, int n_vertices) {
    std::vector<double> w(static_cast<std::size_t>(n_vertices) * n_vertices, 0.0);
    for (const auto &term : decomposition) {
        for (auto [a, b] : term.matching.pairs) {
            bool negative = std::find(term.negated.begin(), term.negated.end(), std::pair{a, b}) != term.negated.end();
            double c = negative ? -term.coefficient : term.coefficient;
            w[a * n_vertices + b] += c;
            w[b * n_vertices + a] += c;
        }
    }
    return w;
}

}  // namespace walshpulse
