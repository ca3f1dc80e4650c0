#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chroma/errors.hpp"

namespace chroma {

using VertexId = int;  // dense, 0-based
using DartId = int;    // darts 2e and 2e+1 are the two ends of edge e
using EdgeId = int;
using FaceId = int;

// A face is the orbit of a dart under the face-successor permutation.
// `boundary` holds the darts in traversal order; its length is the face
// size (an edge on the boundary of only this face is traversed twice).
struct Face {
    std::vector<DartId> boundary;
    int size() const { return static_cast<int>(boundary.size()); }
};

// Connected plane multigraph given by a rotation system.  Rotation lists
// are read as the clockwise order of outgoing darts; faces are derived at
// build time with the convention next(d) = rotation-successor of twin(d).
// Instances are immutable once built and safe to share across threads.
class PlaneGraph {
public:
    // Per-vertex cyclic neighbor lists, 0-based.  For parallel edges the
    // k-th occurrence of v in u's list is paired with the k-th occurrence
    // of u in v's list.  Throws GraphError on loops, unmatched
    // occurrences, disconnected input or a rotation system of genus > 0.
    static PlaneGraph from_rotation(const std::vector<std::vector<VertexId>>& adjacency);

    // Dart-level constructor: explicit twin pairing (d and d^1), one
    // rotation list per vertex.  Used where the neighbor-list matching
    // rule would be ambiguous (e.g. rebuilding a contracted multigraph).
    static PlaneGraph from_darts(int vertex_count, std::vector<VertexId> dart_origin,
                                 std::vector<std::vector<DartId>> rotation);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(dart_origin_.size()) / 2; }
    int dart_count() const { return static_cast<int>(dart_origin_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
    std::span<const DartId> rotation(VertexId v) const { return rotation_[v]; }

    static DartId twin(DartId d) { return d ^ 1; }
    static EdgeId edge_of(DartId d) { return d >> 1; }
    VertexId origin(DartId d) const { return dart_origin_[d]; }
    VertexId head(DartId d) const { return dart_origin_[twin(d)]; }

    DartId rot_succ(DartId d) const;
    DartId rot_pred(DartId d) const;
    // Face traversal: the dart after d on the boundary of face_of(d).
    DartId next_in_face(DartId d) const { return rot_succ(twin(d)); }
    DartId prev_in_face(DartId d) const { return twin(rot_pred(d)); }

    FaceId face_of(DartId d) const { return face_of_[d]; }
    const Face& face(FaceId f) const { return faces_[f]; }
    const std::vector<Face>& faces() const { return faces_; }
    int face_size(FaceId f) const { return faces_[f].size(); }

    // V - E + F; equals 2 for every successfully built instance.
    int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

    // Faces around v in rotation order, one entry per corner, so a face
    // touching v more than once appears with multiplicity.
    std::vector<FaceId> incident_faces(VertexId v) const;

    // Unordered pairs of distinct faces sharing at least one edge,
    // sorted, no duplicates.  Bridges contribute no pair.
    std::vector<std::pair<FaceId, FaceId>> face_adjacency() const;

    // Distinct vertices on the boundary of f, ascending.
    std::vector<VertexId> face_vertices(FaceId f) const;

    bool has_parallel_edges() const;

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= vertex_count_) throw GraphError("vertex id out of range");
    }

private:
    PlaneGraph() = default;
    void derive_faces();
    void validate() const;

    int vertex_count_ = 0;
    std::vector<VertexId> dart_origin_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<int> rot_pos_;  // index of each dart within its rotation list
    std::vector<FaceId> face_of_;
    std::vector<Face> faces_;
};

}  // namespace chroma
