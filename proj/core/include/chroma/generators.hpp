#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/plane_graph.hpp"

namespace chroma {

// Build a plane graph from the full list of its face boundaries (vertex
// cycles, 0-based).  Face orientations may be inconsistent; they are
// repaired so that every edge is traversed once in each direction.
// Simple graphs only.
PlaneGraph plane_graph_from_faces(int vertex_count,
                                  const std::vector<std::vector<VertexId>>& faces);

// The tight family: a hub triangle, a center vertex, and three threads
// (paths of length l) from the center to the triangle corners, embedded
// so the interior splits into three (2l+1)-faces.  The result has 3l+1
// vertices, every two of which are l-facially adjacent; the construction
// throws if that defining property ever fails to hold.
PlaneGraph tight_example(int l);

// Random plane graph: grow a triangulation by inserting each new vertex
// into a uniformly chosen face, then delete each edge independently with
// probability 1 - keep_probability, skipping deletions that would
// disconnect the graph.  Deterministic for a fixed seed.
PlaneGraph random_plane_graph(int n, std::uint64_t seed, double keep_probability = 1.0);

PlaneGraph cycle_graph(int n);
PlaneGraph wheel_graph(int rim);  // rim >= 3; hub is the last vertex

// "tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron",
// plus parametrized names "C<n>" and "W<n>".
PlaneGraph named_graph(const std::string& name);

}  // namespace chroma
