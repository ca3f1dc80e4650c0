#include "chroma/facial.hpp"

#include <algorithm>

namespace chroma {

bool FacialAdjacency::adjacent(VertexId u, VertexId v) const {
    const auto& list = neighbors[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<VertexId> l_facial_neighbors(const PlaneGraph& g, VertexId v, int l) {
    g.check_vertex(v);
    if (l < 0) throw GraphError("negative walk length");
    std::vector<char> mark(g.vertex_count(), 0);
    for (DartId start : g.rotation(v)) {
        DartId d = start;
        for (int step = 0; step < l; ++step) {
            d = g.next_in_face(d);
            mark[g.origin(d)] = 1;
        }
        d = start;
        for (int step = 0; step < l; ++step) {
            d = g.prev_in_face(d);
            mark[g.origin(d)] = 1;
        }
    }
    mark[v] = 0;  // a walk returning to v yields no self-adjacency
    std::vector<VertexId> result;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (mark[u]) result.push_back(u);
    return result;
}

int facial_degree(const PlaneGraph& g, VertexId v, int l) {
    return static_cast<int>(l_facial_neighbors(g, v, l).size());
}

FacialAdjacency facial_adjacency_graph(const PlaneGraph& g, int l) {
    FacialAdjacency adj;
    adj.l = l;
    adj.neighbors.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) adj.neighbors[v] = l_facial_neighbors(g, v, l);
    return adj;
}

int facial_degree_upper_bound(const PlaneGraph& g, VertexId v) {
    g.check_vertex(v);
    int sum = 0;
    for (FaceId f : g.incident_faces(v)) sum += std::min(g.face_size(f), 7);
    return sum - 2 * g.degree(v);
}

}  // namespace chroma
