#include "chroma/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "chroma/facial.hpp"

namespace chroma {

namespace {

using FaceCycle = std::vector<VertexId>;

// Flip face orientations (BFS over shared edges) until every undirected
// edge is traversed once in each direction.
std::vector<FaceCycle> orient_faces(int n, std::vector<FaceCycle> faces) {
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> edge_faces;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& cycle = faces[f];
        if (cycle.size() < 2) throw GraphError("face cycle too short");
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            VertexId u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw GraphError("bad face cycle");
            edge_faces[{std::min(u, v), std::max(u, v)}].push_back(f);
        }
    }
    for (const auto& [e, fs] : edge_faces)
        if (fs.size() != 2) throw GraphError("every edge must lie on exactly two face cycles");

    std::vector<char> fixed(faces.size(), 0);
    std::vector<int> queue;
    auto directed = [&](int f, VertexId u, VertexId v) {
        const auto& cycle = faces[f];
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (cycle[i] == u && cycle[(i + 1) % cycle.size()] == v) return true;
        return false;
    };
    for (int start = 0; start < static_cast<int>(faces.size()); ++start) {
        if (fixed[start]) continue;
        fixed[start] = 1;
        queue.push_back(start);
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            const auto& cycle = faces[f];
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                VertexId u = cycle[i], v = cycle[(i + 1) % cycle.size()];
                const auto& fs = edge_faces[{std::min(u, v), std::max(u, v)}];
                int other = fs[0] == f ? fs[1] : fs[0];
                if (other == f) continue;  // bridge: both sides in one cycle
                if (!fixed[other]) {
                    // The neighbor must traverse the edge the opposite way.
                    if (directed(other, u, v))
                        std::reverse(faces[other].begin(), faces[other].end());
                    fixed[other] = 1;
                    queue.push_back(other);
                } else if (directed(other, u, v)) {
                    throw GraphError("face cycles are not orientable");
                }
            }
        }
    }
    return faces;
}

}  // namespace

PlaneGraph plane_graph_from_faces(int vertex_count,
                                  const std::vector<std::vector<VertexId>>& face_cycles) {
    auto faces = orient_faces(vertex_count, face_cycles);

    // Enumerate edges and the face-successor of every dart.
    std::map<std::pair<VertexId, VertexId>, DartId> dart_of;
    std::vector<VertexId> origin;
    for (const auto& cycle : faces)
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            VertexId u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            auto key = std::make_pair(std::min(u, v), std::max(u, v));
            if (!dart_of.count(key)) {
                dart_of[key] = static_cast<DartId>(origin.size());
                origin.push_back(key.first);
                origin.push_back(key.second);
            }
        }
    auto dart = [&](VertexId u, VertexId v) {
        DartId d = dart_of.at({std::min(u, v), std::max(u, v)});
        return origin[d] == u ? d : PlaneGraph::twin(d);
    };

    std::vector<DartId> face_next(origin.size(), -1);
    for (const auto& cycle : faces)
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            VertexId u = cycle[i];
            VertexId v = cycle[(i + 1) % cycle.size()];
            VertexId w = cycle[(i + 2) % cycle.size()];
            if (face_next[dart(u, v)] != -1) throw GraphError("directed edge traversed twice");
            face_next[dart(u, v)] = dart(v, w);
        }

    // rotation successor of d = face successor of twin(d)
    std::vector<std::vector<DartId>> rotation(vertex_count);
    std::vector<char> placed(origin.size(), 0);
    for (DartId d0 = 0; d0 < static_cast<DartId>(origin.size()); ++d0) {
        if (placed[d0]) continue;
        VertexId v = origin[d0];
        DartId d = d0;
        do {
            rotation[v].push_back(d);
            placed[d] = 1;
            d = face_next[PlaneGraph::twin(d)];
            if (d < 0 || origin[d] != v) throw GraphError("broken rotation orbit");
        } while (d != d0);
    }

    return PlaneGraph::from_darts(vertex_count, std::move(origin), std::move(rotation));
}

PlaneGraph tight_example(int l) {
    if (l < 1) throw GraphError("thread length must be at least 1");
    const VertexId center = 0, u = 1, v = 2, w = 3;
    int next_id = 4;
    auto thread = [&](VertexId corner) {
        std::vector<VertexId> path{center};
        for (int i = 1; i < l; ++i) path.push_back(next_id++);
        path.push_back(corner);
        return path;
    };
    std::vector<VertexId> pu = thread(u), pv = thread(v), pw = thread(w);
    const int n = next_id;

    auto sector = [&](const std::vector<VertexId>& out, const std::vector<VertexId>& back) {
        std::vector<VertexId> cycle(out);
        for (std::size_t i = back.size() - 1; i >= 1; --i) cycle.push_back(back[i]);
        return cycle;
    };
    std::vector<std::vector<VertexId>> faces{
        sector(pu, pv), sector(pv, pw), sector(pw, pu), {u, v, w}};
    PlaneGraph g = plane_graph_from_faces(n, faces);

    if (g.vertex_count() != 3 * l + 1) throw GraphError("tight construction has wrong order");
    FacialAdjacency adj = facial_adjacency_graph(g, l);
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        if (adj.degree(a) != g.vertex_count() - 1)
            throw GraphError("tight construction lost pairwise facial adjacency");
    return g;
}

PlaneGraph random_plane_graph(int n, std::uint64_t seed, double keep_probability) {
    if (n < 3) throw GraphError("need at least 3 vertices");
    if (keep_probability < 0.0 || keep_probability > 1.0)
        throw GraphError("keep probability out of range");
    std::mt19937_64 rng(seed);

    std::vector<std::vector<VertexId>> rot = {{1, 2}, {2, 0}, {0, 1}};
    std::vector<std::array<VertexId, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
    std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {2, 0}};

    auto insert_after = [&](VertexId at, VertexId after, VertexId added) {
        auto& list = rot[at];
        auto it = std::find(list.begin(), list.end(), after);
        list.insert(it + 1, added);
    };

    for (VertexId x = 3; x < n; ++x) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        std::size_t fi = pick(rng);
        auto [a, b, c] = faces[fi];
        rot.push_back({a, c, b});
        insert_after(a, c, x);
        insert_after(b, a, x);
        insert_after(c, b, x);
        faces[fi] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
        edges.push_back({x, a});
        edges.push_back({x, b});
        edges.push_back({x, c});
    }

    auto connected_without = [&](VertexId s, VertexId t) {
        // Is the graph still connected if edge {s,t} is removed?
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId p = stack.back();
            stack.pop_back();
            for (VertexId q : rot[p]) {
                if ((p == s && q == t) || (p == t && q == s)) continue;
                if (!seen[q]) {
                    seen[q] = 1;
                    stack.push_back(q);
                }
            }
        }
        return seen[t] != 0;
    };

    if (keep_probability < 1.0) {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (auto [s, t] : edges) {
            if (coin(rng) < keep_probability) continue;
            if (!connected_without(s, t)) continue;
            std::erase(rot[s], t);
            std::erase(rot[t], s);
        }
    }

    return PlaneGraph::from_rotation(rot);
}

PlaneGraph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    std::vector<VertexId> ring(n);
    for (int i = 0; i < n; ++i) ring[i] = i;
    std::vector<VertexId> reversed(ring.rbegin(), ring.rend());
    return plane_graph_from_faces(n, {ring, reversed});
}

PlaneGraph wheel_graph(int rim) {
    if (rim < 3) throw GraphError("wheel needs at least 3 rim vertices");
    const VertexId hub = rim;
    std::vector<std::vector<VertexId>> faces;
    for (int i = 0; i < rim; ++i) faces.push_back({i, (i + 1) % rim, hub});
    std::vector<VertexId> ring(rim);
    for (int i = 0; i < rim; ++i) ring[i] = i;
    faces.push_back(ring);
    return plane_graph_from_faces(rim + 1, faces);
}

namespace {

PlaneGraph tetrahedron() {
    return plane_graph_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

PlaneGraph cube() {
    return plane_graph_from_faces(8, {{0, 1, 2, 3},
                                      {7, 6, 5, 4},
                                      {0, 4, 5, 1},
                                      {1, 5, 6, 2},
                                      {2, 6, 7, 3},
                                      {3, 7, 4, 0}});
}

PlaneGraph octahedron() {
    return plane_graph_from_faces(6, {{0, 1, 2},
                                      {0, 2, 3},
                                      {0, 3, 4},
                                      {0, 4, 1},
                                      {5, 2, 1},
                                      {5, 3, 2},
                                      {5, 4, 3},
                                      {5, 1, 4}});
}

PlaneGraph dodecahedron() {
    // Rings of five: inner face 0-4, spokes to 5-9, zigzag to 10-14,
    // spokes to the outer face 15-19.
    auto succ = [](int i) { return (i + 1) % 5; };
    std::vector<std::vector<VertexId>> faces;
    faces.push_back({0, 1, 2, 3, 4});
    for (int i = 0; i < 5; ++i)
        faces.push_back({i, 5 + i, 10 + i, 5 + succ(i), succ(i)});
    for (int i = 0; i < 5; ++i)
        faces.push_back({10 + i, 15 + i, 15 + succ(i), 10 + succ(i), 5 + succ(i)});
    faces.push_back({15, 16, 17, 18, 19});
    return plane_graph_from_faces(20, faces);
}

PlaneGraph icosahedron() {
    auto succ = [](int i) { return (i + 1) % 5; };
    std::vector<std::vector<VertexId>> faces;
    for (int i = 0; i < 5; ++i) faces.push_back({0, 1 + i, 1 + succ(i)});
    for (int i = 0; i < 5; ++i) {
        faces.push_back({1 + i, 6 + i, 1 + succ(i)});
        faces.push_back({1 + succ(i), 6 + i, 6 + succ(i)});
    }
    for (int i = 0; i < 5; ++i) faces.push_back({11, 6 + succ(i), 6 + i});
    return plane_graph_from_faces(12, faces);
}

}  // namespace

PlaneGraph named_graph(const std::string& name) {
    if (name == "tetrahedron") return tetrahedron();
    if (name == "cube") return cube();
    if (name == "octahedron") return octahedron();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "icosahedron") return icosahedron();
    if (name.size() > 1 && (name[0] == 'C' || name[0] == 'c')) {
        int n = std::stoi(name.substr(1));
        return cycle_graph(n);
    }
    if (name.size() > 1 && (name[0] == 'W' || name[0] == 'w')) {
        int n = std::stoi(name.substr(1));
        return wheel_graph(n);
    }
    throw GraphError("unknown graph name: " + name);
}

}  // namespace chroma
