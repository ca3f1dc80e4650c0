#pragma once

#include <vector>

#include "chroma/plane_graph.hpp"

namespace chroma {

// Symmetric adjacency structure over all vertices of a plane graph:
// u and v are adjacent here when some boundary walk of length at most l
// joins them along a single face.
struct FacialAdjacency {
    int l = 0;
    std::vector<std::vector<VertexId>> neighbors;  // sorted, no self entries

    int vertex_count() const { return static_cast<int>(neighbors.size()); }
    int degree(VertexId v) const { return static_cast<int>(neighbors[v].size()); }
    bool adjacent(VertexId u, VertexId v) const;
};

// Vertices distinct from v reached by walking at most l steps in either
// direction from every boundary occurrence of v.  Sorted.
std::vector<VertexId> l_facial_neighbors(const PlaneGraph& g, VertexId v, int l);

int facial_degree(const PlaneGraph& g, VertexId v, int l);

FacialAdjacency facial_adjacency_graph(const PlaneGraph& g, int l);

// Upper bound on the 3-facial degree of v from its incident face sizes
// f_1..f_d (with multiplicity): sum of min(|f_i|, 7) minus 2d.
int facial_degree_upper_bound(const PlaneGraph& g, VertexId v);

}  // namespace chroma
