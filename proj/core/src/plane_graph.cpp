#include "chroma/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace chroma {

PlaneGraph PlaneGraph::from_rotation(const std::vector<std::vector<VertexId>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n == 0) throw GraphError("empty graph");

    std::size_t half_edges = 0;
    for (const auto& list : adjacency) half_edges += list.size();
    if (half_edges % 2 != 0) throw GraphError("odd number of edge ends");

    std::vector<VertexId> origin;
    origin.reserve(half_edges);
    std::vector<std::vector<DartId>> rotation(n);

    // FIFO queues pair the k-th occurrence of v at u with the k-th
    // occurrence of u at v.
    std::map<std::pair<VertexId, VertexId>, std::deque<DartId>> pending;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : adjacency[u]) {
            if (v < 0 || v >= n) throw GraphError("neighbor id out of range");
            if (v == u) throw GraphError("loops are not supported");
            if (u < v) {
                DartId d = static_cast<DartId>(origin.size());
                origin.push_back(u);
                origin.push_back(v);
                rotation[u].push_back(d);
                pending[{u, v}].push_back(d + 1);
            } else {
                auto it = pending.find({v, u});
                if (it == pending.end() || it->second.empty())
                    throw GraphError("unmatched neighbor occurrence between vertices " +
                                     std::to_string(v + 1) + " and " + std::to_string(u + 1));
                rotation[u].push_back(it->second.front());
                it->second.pop_front();
            }
        }
    }
    for (const auto& [key, queue] : pending)
        if (!queue.empty())
            throw GraphError("unmatched neighbor occurrence between vertices " +
                             std::to_string(key.first + 1) + " and " +
                             std::to_string(key.second + 1));

    return from_darts(n, std::move(origin), std::move(rotation));
}

PlaneGraph PlaneGraph::from_darts(int vertex_count, std::vector<VertexId> dart_origin,
                                  std::vector<std::vector<DartId>> rotation) {
    PlaneGraph g;
    g.vertex_count_ = vertex_count;
    g.dart_origin_ = std::move(dart_origin);
    g.rotation_ = std::move(rotation);
    g.validate();
    g.derive_faces();
    if (g.edge_count() > 0 && g.euler_characteristic() != 2)
        throw GraphError("rotation system is not a plane embedding (genus > 0)");
    return g;
}

void PlaneGraph::validate() const {
    if (vertex_count_ <= 0) throw GraphError("empty graph");
    if (static_cast<int>(rotation_.size()) != vertex_count_)
        throw GraphError("rotation table size mismatch");
    if (dart_origin_.size() % 2 != 0) throw GraphError("darts must come in twin pairs");

    const int dn = static_cast<int>(dart_origin_.size());
    std::vector<char> seen(dn, 0);
    for (VertexId v = 0; v < vertex_count_; ++v) {
        for (DartId d : rotation_[v]) {
            if (d < 0 || d >= dn) throw GraphError("dart id out of range");
            if (seen[d]) throw GraphError("dart appears in two rotation lists");
            seen[d] = 1;
            if (dart_origin_[d] != v) throw GraphError("dart listed away from its origin");
        }
    }
    for (int d = 0; d < dn; ++d) {
        if (!seen[d]) throw GraphError("dart missing from rotation lists");
        if (dart_origin_[d] == dart_origin_[twin(d)]) throw GraphError("loops are not supported");
    }

    // Connectivity over the underlying multigraph.
    std::vector<char> visited(vertex_count_, 0);
    std::vector<VertexId> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (DartId d : rotation_[u]) {
            VertexId w = dart_origin_[twin(d)];
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != vertex_count_) throw GraphError("graph is not connected");
}

void PlaneGraph::derive_faces() {
    const int dn = static_cast<int>(dart_origin_.size());
    rot_pos_.assign(dn, -1);
    for (VertexId v = 0; v < vertex_count_; ++v)
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i)
            rot_pos_[rotation_[v][i]] = i;

    face_of_.assign(dn, -1);
    faces_.clear();
    for (DartId start = 0; start < dn; ++start) {
        if (face_of_[start] != -1) continue;
        Face face;
        FaceId id = static_cast<FaceId>(faces_.size());
        DartId d = start;
        do {
            face_of_[d] = id;
            face.boundary.push_back(d);
            d = next_in_face(d);
        } while (d != start);
        faces_.push_back(std::move(face));
    }
    if (dn == 0) {
        // Single vertex: one face with an empty boundary keeps Euler at 2.
        faces_.push_back(Face{});
    }
}

DartId PlaneGraph::rot_succ(DartId d) const {
    const auto& list = rotation_[dart_origin_[d]];
    int i = rot_pos_[d] + 1;
    if (i == static_cast<int>(list.size())) i = 0;
    return list[i];
}

DartId PlaneGraph::rot_pred(DartId d) const {
    const auto& list = rotation_[dart_origin_[d]];
    int i = rot_pos_[d];
    return list[i == 0 ? list.size() - 1 : i - 1];
}

std::vector<FaceId> PlaneGraph::incident_faces(VertexId v) const {
    check_vertex(v);
    std::vector<FaceId> result;
    result.reserve(rotation_[v].size());
    for (DartId d : rotation_[v]) result.push_back(face_of_[d]);
    return result;
}

std::vector<std::pair<FaceId, FaceId>> PlaneGraph::face_adjacency() const {
    std::set<std::pair<FaceId, FaceId>> pairs;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        FaceId a = face_of_[2 * e];
        FaceId b = face_of_[2 * e + 1];
        if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
    }
    return {pairs.begin(), pairs.end()};
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
    std::vector<VertexId> vs;
    vs.reserve(faces_[f].boundary.size());
    for (DartId d : faces_[f].boundary) vs.push_back(dart_origin_[d]);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool PlaneGraph::has_parallel_edges() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        VertexId u = dart_origin_[2 * e];
        VertexId v = dart_origin_[2 * e + 1];
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return true;
    }
    return false;
}

}  // namespace chroma
