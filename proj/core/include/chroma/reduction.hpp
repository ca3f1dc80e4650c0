#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/plane_graph.hpp"

namespace chroma {

// One contractible piece: a set of vertices inducing a connected
// subgraph, and the subset of them that will adopt the color of the
// contracted vertex.
struct ReductionPart {
    std::vector<VertexId> vertices;
    std::vector<VertexId> representatives;
};

// A declarative contract-and-lift reduction: contract every part, color
// the minor, lift the coloring back (representatives take their part's
// color), then recolor the `uncolored` vertices greedily in order.
// `uncolored` must cover every part vertex that is not a representative
// and may additionally list vertices outside the parts whose lifted
// color is discarded.
//
// Parts that induce trees preserve every facial adjacency between kept
// vertices, so a lifted coloring can only clash on representative pairs.
// A part containing a cycle contracts to a loop whose deletion merges
// two faces, which can silently drop a facial adjacency of the original;
// run_reduction verifies the final coloring and reports such scripts as
// `improper` with the offending pairs.
struct ReductionScript {
    std::vector<ReductionPart> parts;
    std::vector<VertexId> uncolored;
    int k = 11;
};

struct ContractionResult {
    PlaneGraph minor;
    std::vector<VertexId> vertex_map;  // original vertex -> minor vertex
};

// Embedding-preserving contraction of each part (iterated edge
// contraction with rotation splicing); loops are deleted, parallel edges
// kept.  A part equal to the whole vertex set or inducing a disconnected
// subgraph is an error.
ContractionResult contract(const PlaneGraph& g, const std::vector<std::vector<VertexId>>& parts);

struct LiftResult {
    Coloring partial;  // uncolored entries are 0
    // l-facially adjacent representative pairs that received equal colors
    std::vector<std::pair<VertexId, VertexId>> conflicts;
};

LiftResult lift(const PlaneGraph& g, int l, const ReductionScript& script,
                const ContractionResult& contraction, const Coloring& minor_coloring);

// L(u) = {1..k} minus the colors of u's l-facial neighbors outside U.
ListAssignment residual_lists(const PlaneGraph& g, int l, const Coloring& partial,
                              const std::vector<VertexId>& uncolored, int k);

enum class ReductionOutcome {
    success,
    minor_uncolorable,
    lift_conflict,
    extension_stuck,
    improper,
};

struct ReductionReport {
    ReductionOutcome outcome = ReductionOutcome::improper;
    int minor_chromatic = 0;
    Coloring minor_coloring;
    std::vector<std::pair<VertexId, VertexId>> lift_conflicts;
    std::vector<int> list_sizes;  // |L(u_i)| per uncolored vertex, in order
    Coloring final_coloring;
    std::optional<VertexId> stuck;
    std::vector<std::pair<VertexId, VertexId>> violations;

    bool success() const { return outcome == ReductionOutcome::success; }
};

ReductionReport run_reduction(const PlaneGraph& g, int l, const ReductionScript& script,
                              const SolverBudget& budget = {});

}  // namespace chroma
