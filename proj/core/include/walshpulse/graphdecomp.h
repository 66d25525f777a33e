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

#ifndef WALSHPULSE_GRAPHDECOMP_H
#define WALSHPULSE_GRAPHDECOMP_H

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace walshpulse {

/// Weights that differ by less than this are treated as equal when peeling.
inline constexpr double kWeightTolerance = 1e-12;

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 0;
};

/// Simple undirected graph with nonzero real edge weights. Edges are kept
/// sorted by (u, v) with u < v.
class WeightedGraph {
   public:
    explicit WeightedGraph(int n_vertices = 0);

    void add_edge(int i, int j, double weight);

    int n_vertices() const {
        return n_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    bool empty() const {
        return edges_.empty();
    }
    std::optional<double> weight(int i, int j) const;
    int degree(int v) const;
    int max_degree() const;

   private:
    int n_;
    std::vector<Edge> edges_;
};

/// Vertex-disjoint set of pairs (i < j), sorted.
struct Matching {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> pairs;

    bool contains(int i, int j) const;
    /// Partner of v, or -1.
    int partner(int v) const;
    bool operator==(const Matching &) const = default;
};

/// Builds a matching from pairs in any order; throws if pairs share a vertex.
Matching make_matching(int n_vertices, std::vector<std::pair<int, int>> pairs);

struct DecompositionTerm {
    double coefficient = 0;
    Matching matching;
    std::vector<std::pair<int, int>> negated;
};

/// Terms with sum_q c_q * (signed adjacency of term q) equal to the source weights.
using WeightedDecomposition = std::vector<DecompositionTerm>;

/// Degree-one covering by repeated greedy matching: the highest-degree vertex
/// is paired with its highest-degree neighbour, ties broken by lowest index.
std::vector<Matching> greedy_degree1(const WeightedGraph &graph);

/// Splits the n/2 zig-zag Hamilton paths of K_n into odd-link and even-link
/// matchings, dropping empty ones. n must be even.
std::vector<Matching> hamilton_path_decompose(int n);

/// Like hamilton_path_decompose but accepts odd n by padding with a phantom vertex.
std::vector<Matching> complete_graph_matchings(int n);

/// Restricts base matchings to the edges of `graph`, dropping empty results.
std::vector<Matching> restrict_matchings(const WeightedGraph &graph, std::span<const Matching> base);

/// Peels each weighted base matching into unweighted layers by repeatedly
/// subtracting the smallest remaining |weight|.
WeightedDecomposition weighted_decompose(const WeightedGraph &graph, std::span<const Matching> base);

/// Dense symmetric matrix (row-major) of sum_q c_q * signed adjacency.
std::vector<double> reconstruct_weights(const WeightedDecomposition &decomposition, int n_vertices);

/// Ascending distinct |weights| grouped with kWeightTolerance.
std::vector<double> weight_levels(std::span<const double> magnitudes);

}  // namespace walshpulse

#endif
