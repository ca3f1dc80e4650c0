#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chroma/facial.hpp"
#include "chroma/plane_graph.hpp"

namespace chroma {

// Partial or total vertex coloring with colors in {1..k}; 0 marks an
// uncolored vertex.
struct Coloring {
    int k = 0;
    std::vector<int> color;

    bool total() const {
        for (int c : color)
            if (c == 0) return false;
        return !color.empty();
    }
    int colors_used() const;
};

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // per vertex, positive colors
};

// Abstract simple graph used by the solvers and the choosability oracle.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);

    bool adjacent(int u, int v) const;
    int edge_count() const;
    bool connected() const;
};

SimpleGraph to_simple_graph(const FacialAdjacency& adj);

// All pairs of l-facially adjacent vertices carrying the same color,
// sorted.  Throws GraphError when the coloring is not total.
std::vector<std::pair<VertexId, VertexId>> verify(const PlaneGraph& g, int l,
                                                  const Coloring& coloring);

struct GreedyResult {
    Coloring coloring;                // partial on failure
    std::optional<VertexId> stuck;    // first vertex with no color available
    bool success() const { return !stuck.has_value(); }
};

// Color the vertices in `order` with the smallest color of {1..k} absent
// from already-colored l-facial neighbors.
GreedyResult greedy_color(const PlaneGraph& g, int l, int k, const std::vector<VertexId>& order);

struct SolverBudget {
    int max_vertices = 64;
    std::uint64_t max_nodes = 50'000'000;
};

struct ChromaticResult {
    int chromatic_number = 0;
    Coloring witness;
};

// Exact chromatic number by branch and bound: greedy clique lower bound,
// saturation-ordered branching, colors of one maximum clique fixed up
// front to break color symmetry.
ChromaticResult chromatic_number(const SimpleGraph& g, const SolverBudget& budget = {});

// Minimum k admitting an l-facial coloring of g, with witness.
ChromaticResult exact_chromatic(const PlaneGraph& g, int l, const SolverBudget& budget = {});

// Exhaustive list coloring: a proper coloring with c(v) in lists[v], or
// nullopt when none exists.
std::optional<std::vector<int>> list_color_brute(const SimpleGraph& g, const ListAssignment& lists);

// True when every biconnected block is a complete graph or an odd cycle.
// Input must be connected.
bool is_gallai_tree(const SimpleGraph& g);

// Brute-force degree-choosability: true when every list assignment with
// |L(v)| = deg(v) over colors {1..max_colors} (up to color relabeling)
// admits a proper list coloring.  Limited to graphs with at most 8
// vertices.
bool degree_choosable(const SimpleGraph& g, int max_colors);

// Enumerates canonical list assignments with the given per-vertex list
// sizes (lists as multisets of vertex-occurrence sets, which is exactly
// enumeration up to color relabeling) and calls `visit` on each; stops
// early when `visit` returns false.  Returns false iff stopped early.
bool for_each_canonical_list_assignment(const SimpleGraph& g, const std::vector<int>& sizes,
                                        int max_colors,
                                        const std::function<bool(const ListAssignment&)>& visit);

}  // namespace chroma
