#pragma once

#include <string>
#include <vector>

#include "chroma/plane_graph.hpp"

namespace chroma {

enum class VertexClass { plain, safe, dangerous };

// A 5-face is bad when at least four of its vertices have degree 3 and
// very bad when all five do.
enum class FaceBadness { other, bad, very_bad };

inline bool is_bad(FaceBadness b) { return b != FaceBadness::other; }

// Per-face tallies: incident dangerous/safe vertices (distinct) and
// adjacent 3-faces / bad faces / very-bad faces (distinct faces).
struct FaceCounts {
    int dgs = 0, sfe = 0, fce = 0, bad = 0, vbd = 0;
};

struct Classification {
    std::vector<VertexClass> vertex_class;
    std::vector<FaceBadness> face_class;
    std::vector<FaceCounts> face_counts;
};

Classification classify(const PlaneGraph& g);

// Path-type statistics of one face: the boundary segments between
// consecutive dangerous vertices, classified by how the dangerous
// endpoints' small faces attach to them.  Types are only defined for
// faces of size >= 9 carrying at least one dangerous vertex
// (types_valid).  Here dgs counts boundary occurrences.
struct BoundaryStats {
    FaceCounts counts;
    bool types_valid = false;
    int dgs_occurrences = 0;
    int alpha = 0;  // >=1 internal vertices, neither end attached
    int beta = 0;   // >=1 internal vertices, both ends attached
    int gamma = 0;  // exactly one end attached
    int delta = 0;  // single edge inside a shared 3-face
    int eps0 = 0;   // single edge, no small face across
    int eps1 = 0;   // single edge with a small (4-)face across
};

BoundaryStats boundary_path_stats(const PlaneGraph& g, FaceId f);
BoundaryStats boundary_path_stats(const PlaneGraph& g, FaceId f, const Classification& cls);

// A located violation of a structural property.  Empty scan results mean
// the graph is consistent with the property set under test.
struct Witness {
    std::string property;
    std::vector<VertexId> vertices;
    std::vector<FaceId> faces;
    std::string detail;
};

// Witness property ids emitted by minimality_witnesses.
inline constexpr const char* kNot2Connected = "not-2-connected";
inline constexpr const char* kShortSeparatingCycle = "short-separating-cycle";
inline constexpr const char* kSmallAdjacentFaces = "small-adjacent-faces";
inline constexpr const char* kLowFacialDegree = "low-3-facial-degree";
inline constexpr const char* kLightEdge = "light-edge";

// Witness property ids emitted by pattern_witnesses.
inline constexpr const char* kCubicEdgeOnTwo5Faces = "cubic-edge-on-two-5-faces";
inline constexpr const char* kSmallFaceNearCubic7Face = "small-face-near-cubic-7-face";
inline constexpr const char* kDangerousPairWithTriangle = "dangerous-pair-with-triangle";
inline constexpr const char* kAdjacentDangerousOn6Face = "adjacent-dangerous-on-6-face";
inline constexpr const char* kFourConsecutiveDangerous = "four-consecutive-dangerous";
inline constexpr const char* kVeryBadFewBigNeighbors = "very-bad-few-big-neighbors";
inline constexpr const char* kBadFewBigNeighbors = "bad-few-big-neighbors";

// Scan for structure every graph below the coloring threshold must avoid:
// cut vertices, separating cycles of length at most 7, adjacent faces
// with sizes summing to at most 9, vertices of 3-facial degree below 11,
// and an edge between two (>=4)-faces whose endpoint degrees deg_3 are
// at most 11 and 12.
std::vector<Witness> minimality_witnesses(const PlaneGraph& g);

// Scan for the seven forbidden local patterns around small faces and
// dangerous vertices.
std::vector<Witness> pattern_witnesses(const PlaneGraph& g);

// Re-check a witness against the graph.
bool revalidate(const PlaneGraph& g, const Witness& w);

// All simple cycles with at most max_length edges, as dart sequences
// (dart i runs from the i-th cycle vertex to the next).  Cycles through
// parallel edges are enumerated once per edge pair.
std::vector<std::vector<DartId>> simple_cycles_up_to(const PlaneGraph& g, int max_length);

// True when both sides of the cycle's closed curve contain a vertex not
// on the cycle.  Sides are derived by flooding the face adjacency with
// the cycle edges removed.
bool is_separating_cycle(const PlaneGraph& g, const std::vector<DartId>& cycle);

}  // namespace chroma
