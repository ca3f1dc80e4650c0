#include "chroma/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "chroma/facial.hpp"

namespace chroma {

namespace {

std::vector<std::set<FaceId>> adjacent_faces_of(const PlaneGraph& g) {
    std::vector<std::set<FaceId>> adjacent(g.face_count());
    for (auto [a, b] : g.face_adjacency()) {
        adjacent[a].insert(b);
        adjacent[b].insert(a);
    }
    return adjacent;
}

}  // namespace

Classification classify(const PlaneGraph& g) {
    Classification cls;
    cls.vertex_class.resize(g.vertex_count(), VertexClass::plain);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 3) continue;
        bool small_face = false;
        for (FaceId f : g.incident_faces(v))
            if (g.face_size(f) <= 4) small_face = true;
        cls.vertex_class[v] = small_face ? VertexClass::dangerous : VertexClass::safe;
    }

    cls.face_class.resize(g.face_count(), FaceBadness::other);
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (g.face_size(f) != 5) continue;
        int cubic = 0;
        for (VertexId v : g.face_vertices(f))
            if (g.degree(v) == 3) ++cubic;
        if (cubic == 5)
            cls.face_class[f] = FaceBadness::very_bad;
        else if (cubic >= 4)
            cls.face_class[f] = FaceBadness::bad;
    }

    auto adjacent = adjacent_faces_of(g);
    cls.face_counts.resize(g.face_count());
    for (FaceId f = 0; f < g.face_count(); ++f) {
        FaceCounts& c = cls.face_counts[f];
        for (VertexId v : g.face_vertices(f)) {
            if (cls.vertex_class[v] == VertexClass::dangerous) ++c.dgs;
            if (cls.vertex_class[v] == VertexClass::safe) ++c.sfe;
        }
        for (FaceId other : adjacent[f]) {
            if (g.face_size(other) == 3) ++c.fce;
            if (is_bad(cls.face_class[other])) ++c.bad;
            if (cls.face_class[other] == FaceBadness::very_bad) ++c.vbd;
        }
    }
    return cls;
}

BoundaryStats boundary_path_stats(const PlaneGraph& g, FaceId f) {
    return boundary_path_stats(g, f, classify(g));
}

BoundaryStats boundary_path_stats(const PlaneGraph& g, FaceId f, const Classification& cls) {
    BoundaryStats stats;
    stats.counts = cls.face_counts[f];

    const auto& boundary = g.face(f).boundary;
    const int m = static_cast<int>(boundary.size());
    std::vector<int> positions;  // boundary occurrences of dangerous vertices
    for (int i = 0; i < m; ++i)
        if (cls.vertex_class[g.origin(boundary[i])] == VertexClass::dangerous)
            positions.push_back(i);
    stats.dgs_occurrences = static_cast<int>(positions.size());

    if (g.face_size(f) < 9 || positions.empty()) return stats;
    stats.types_valid = true;

    // For a dangerous occurrence the associated small face is the one
    // reached first clockwise from this face's corner; `attach_forward`
    // records whether it lies across the boundary edge leaving the
    // occurrence (else it lies across the edge entering it).
    const int count = stats.dgs_occurrences;
    std::vector<char> attach_forward(count, 0);
    std::vector<FaceId> small_face(count, -1);
    for (int i = 0; i < count; ++i) {
        DartId d = boundary[positions[i]];
        FaceId fwd = g.face_of(g.rot_succ(d));
        FaceId bwd = g.face_of(g.rot_pred(d));
        if (g.face_size(fwd) <= 4) {
            attach_forward[i] = 1;
            small_face[i] = fwd;
        } else if (g.face_size(bwd) <= 4) {
            small_face[i] = bwd;
        } else {
            throw GraphError("dangerous vertex without a small face at its corner");
        }
    }

    for (int i = 0; i < count; ++i) {
        int pos_from = positions[i];
        int pos_to = positions[(i + 1) % count];
        int edges = (pos_to - pos_from + m) % m;
        if (edges == 0) edges = m;  // single dangerous occurrence: full loop
        int internal = edges - 1;
        int attach = (attach_forward[i] ? 1 : 0) + (attach_forward[(i + 1) % count] ? 0 : 1);
        if (internal >= 1) {
            if (attach == 2)
                ++stats.beta;
            else if (attach == 1)
                ++stats.gamma;
            else
                ++stats.alpha;
        } else {
            if (attach == 2) {
                FaceId across = small_face[i];
                if (g.face_size(across) == 3)
                    ++stats.delta;
                else
                    ++stats.eps1;
            } else if (attach == 1) {
                ++stats.gamma;
            } else {
                ++stats.eps0;
            }
        }
    }
    return stats;
}

namespace {

// Articulation vertices of the underlying multigraph; parallel edges make
// their endpoints biconnected.
std::vector<VertexId> cut_vertices(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> num(n, 0), low(n, 0);
    std::vector<char> is_cut(n, 0);
    int counter = 0;

    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        std::size_t next_dart;
        int children = 0;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (num[root]) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        num[root] = low[root] = ++counter;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.next_dart < g.rotation(fr.v).size()) {
                DartId d = g.rotation(fr.v)[fr.next_dart++];
                EdgeId e = PlaneGraph::edge_of(d);
                if (e == fr.parent_edge) continue;
                VertexId u = g.head(d);
                if (num[u] == 0) {
                    num[u] = low[u] = ++counter;
                    ++fr.children;
                    stack.push_back({u, e, 0, 0});
                } else {
                    low[fr.v] = std::min(low[fr.v], num[u]);
                }
            } else {
                Frame done = fr;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (parent.parent_edge != -1 && low[done.v] >= num[parent.v])
                        is_cut[parent.v] = 1;
                    if (parent.parent_edge == -1 && low[done.v] >= num[parent.v] &&
                        parent.children >= 2)
                        is_cut[parent.v] = 1;
                }
            }
        }
    }
    std::vector<VertexId> result;
    for (VertexId v = 0; v < n; ++v)
        if (is_cut[v]) result.push_back(v);
    return result;
}

std::vector<VertexId> cycle_vertices(const PlaneGraph& g, const std::vector<DartId>& cycle) {
    std::vector<VertexId> vs;
    vs.reserve(cycle.size());
    for (DartId d : cycle) vs.push_back(g.origin(d));
    return vs;
}

}  // namespace

std::vector<std::vector<DartId>> simple_cycles_up_to(const PlaneGraph& g, int max_length) {
    std::vector<std::vector<DartId>> cycles;
    std::set<std::vector<EdgeId>> seen;
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<char> edge_used(g.edge_count(), 0);
    std::vector<DartId> path;

    std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId u) {
        for (DartId d : g.rotation(u)) {
            EdgeId e = PlaneGraph::edge_of(d);
            if (edge_used[e]) continue;
            VertexId w = g.head(d);
            if (w == start && !path.empty()) {
                std::vector<DartId> cycle(path);
                cycle.push_back(d);
                std::vector<EdgeId> key;
                key.reserve(cycle.size());
                for (DartId cd : cycle) key.push_back(PlaneGraph::edge_of(cd));
                std::sort(key.begin(), key.end());
                if (seen.insert(key).second) cycles.push_back(std::move(cycle));
                continue;
            }
            if (w <= start || on_path[w]) continue;
            if (static_cast<int>(path.size()) + 2 > max_length) continue;
            on_path[w] = 1;
            edge_used[e] = 1;
            path.push_back(d);
            extend(start, w);
            path.pop_back();
            edge_used[e] = 0;
            on_path[w] = 0;
        }
    };

    for (VertexId s = 0; s < n; ++s) {
        if (max_length < 2) break;
        on_path[s] = 1;
        extend(s, s);
        on_path[s] = 0;
    }
    return cycles;
}

bool is_separating_cycle(const PlaneGraph& g, const std::vector<DartId>& cycle) {
    std::vector<char> cycle_edge(g.edge_count(), 0);
    std::vector<char> on_cycle(g.vertex_count(), 0);
    for (DartId d : cycle) {
        cycle_edge[PlaneGraph::edge_of(d)] = 1;
        on_cycle[g.origin(d)] = 1;
    }

    std::vector<int> side(g.face_count(), -1);
    std::vector<FaceId> queue;
    auto seed = [&](FaceId f, int s) {
        if (side[f] == -1) {
            side[f] = s;
            queue.push_back(f);
        } else if (side[f] != s) {
            throw GraphError("cycle is not a simple closed curve");
        }
    };
    for (DartId d : cycle) {
        seed(g.face_of(d), 0);
        seed(g.face_of(PlaneGraph::twin(d)), 1);
    }
    while (!queue.empty()) {
        FaceId f = queue.back();
        queue.pop_back();
        for (DartId d : g.face(f).boundary) {
            if (cycle_edge[PlaneGraph::edge_of(d)]) continue;
            seed(g.face_of(PlaneGraph::twin(d)), side[f]);
        }
    }

    bool found[2] = {false, false};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (on_cycle[v] || g.degree(v) == 0) continue;
        int s = side[g.face_of(g.rotation(v)[0])];
        if (s >= 0) found[s] = true;
    }
    return found[0] && found[1];
}

std::vector<Witness> minimality_witnesses(const PlaneGraph& g) {
    std::vector<Witness> out;

    if (g.vertex_count() <= 2) {
        if (!(g.vertex_count() == 2 && g.edge_count() >= 2))
            out.push_back({kNot2Connected, {}, {}, "fewer than 3 vertices"});
    }
    for (VertexId v : cut_vertices(g)) out.push_back({kNot2Connected, {v}, {}, "cut vertex"});

    for (const auto& cycle : simple_cycles_up_to(g, 7))
        if (is_separating_cycle(g, cycle))
            out.push_back({kShortSeparatingCycle, cycle_vertices(g, cycle), {},
                           "separating cycle of length " + std::to_string(cycle.size())});

    for (auto [a, b] : g.face_adjacency())
        if (g.face_size(a) + g.face_size(b) <= 9)
            out.push_back({kSmallAdjacentFaces,
                           {},
                           {a, b},
                           std::to_string(g.face_size(a)) + "+" + std::to_string(g.face_size(b))});

    std::vector<int> deg3(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) deg3[v] = facial_degree(g, v, 3);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (deg3[v] < 11)
            out.push_back({kLowFacialDegree, {v}, {}, "deg3 = " + std::to_string(deg3[v])});

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        FaceId fa = g.face_of(2 * e), fb = g.face_of(2 * e + 1);
        if (fa == fb || g.face_size(fa) < 4 || g.face_size(fb) < 4) continue;
        VertexId u = g.origin(2 * e), w = g.origin(2 * e + 1);
        int lo = std::min(deg3[u], deg3[w]), hi = std::max(deg3[u], deg3[w]);
        if (lo <= 11 && hi <= 12)
            out.push_back({kLightEdge,
                           {u, w},
                           {fa, fb},
                           "deg3 " + std::to_string(deg3[u]) + "," + std::to_string(deg3[w])});
    }
    return out;
}

namespace {

bool common_small_face(const PlaneGraph& g, VertexId u, VertexId w) {
    std::set<FaceId> small;
    for (FaceId f : g.incident_faces(u))
        if (g.face_size(f) <= 4) small.insert(f);
    for (FaceId f : g.incident_faces(w))
        if (g.face_size(f) <= 4 && small.count(f)) return true;
    return false;
}

bool vertices_adjacent(const PlaneGraph& g, VertexId u, VertexId w) {
    for (DartId d : g.rotation(u))
        if (g.head(d) == w) return true;
    return false;
}

}  // namespace

std::vector<Witness> pattern_witnesses(const PlaneGraph& g) {
    std::vector<Witness> out;
    Classification cls = classify(g);
    auto adjacent = adjacent_faces_of(g);

    // An edge of two 5-faces with both endpoints of degree 3.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        FaceId fa = g.face_of(2 * e), fb = g.face_of(2 * e + 1);
        if (fa == fb || g.face_size(fa) != 5 || g.face_size(fb) != 5) continue;
        VertexId u = g.origin(2 * e), w = g.origin(2 * e + 1);
        if (g.degree(u) == 3 && g.degree(w) == 3)
            out.push_back({kCubicEdgeOnTwo5Faces, {std::min(u, w), std::max(u, w)},
                           {std::min(fa, fb), std::max(fa, fb)}, ""});
    }

    // A 7-face with only degree-3 vertices that touches a 3-face must
    // otherwise be surrounded by (>=7)-faces.
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (g.face_size(f) != 7) continue;
        bool all_cubic = true;
        for (VertexId v : g.face_vertices(f))
            if (g.degree(v) != 3) all_cubic = false;
        if (!all_cubic) continue;
        FaceId triangle = -1;
        for (FaceId other : adjacent[f])
            if (g.face_size(other) == 3) {
                triangle = other;
                break;
            }
        if (triangle == -1) continue;
        for (FaceId other : adjacent[f])
            if (other != triangle && g.face_size(other) < 7)
                out.push_back({kSmallFaceNearCubic7Face, {}, {f, other},
                               "size " + std::to_string(g.face_size(other))});
    }

    // Adjacent dangerous vertices without a shared small face must avoid
    // 3-faces entirely.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = g.origin(2 * e), w = g.origin(2 * e + 1);
        if (cls.vertex_class[u] != VertexClass::dangerous ||
            cls.vertex_class[w] != VertexClass::dangerous)
            continue;
        if (common_small_face(g, u, w)) continue;
        std::set<FaceId> triangles;
        for (FaceId f : g.incident_faces(u))
            if (g.face_size(f) == 3) triangles.insert(f);
        for (FaceId f : g.incident_faces(w))
            if (g.face_size(f) == 3) triangles.insert(f);
        if (!triangles.empty())
            out.push_back({kDangerousPairWithTriangle, {std::min(u, w), std::max(u, w)},
                           {triangles.begin(), triangles.end()}, ""});
    }

    // Dangerous vertices on a common 6-face must not be adjacent.
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (g.face_size(f) != 6) continue;
        std::vector<VertexId> dangerous;
        for (VertexId v : g.face_vertices(f))
            if (cls.vertex_class[v] == VertexClass::dangerous) dangerous.push_back(v);
        for (std::size_t i = 0; i < dangerous.size(); ++i)
            for (std::size_t j = i + 1; j < dangerous.size(); ++j)
                if (vertices_adjacent(g, dangerous[i], dangerous[j]))
                    out.push_back({kAdjacentDangerousOn6Face,
                                   {dangerous[i], dangerous[j]},
                                   {f},
                                   ""});
    }

    // Four consecutive dangerous vertices on a (>=6)-face.
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (g.face_size(f) < 6) continue;
        const auto& boundary = g.face(f).boundary;
        const int m = static_cast<int>(boundary.size());
        for (int i = 0; i < m; ++i) {
            bool run = true;
            std::vector<VertexId> window;
            for (int k = 0; k < 4; ++k) {
                VertexId v = g.origin(boundary[(i + k) % m]);
                window.push_back(v);
                if (cls.vertex_class[v] != VertexClass::dangerous) run = false;
            }
            if (run) out.push_back({kFourConsecutiveDangerous, window, {f}, ""});
        }
    }

    // Bad faces need big neighbors: three (>=7)-faces for very bad, two
    // for bad.
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (!is_bad(cls.face_class[f])) continue;
        int big = 0;
        for (FaceId other : adjacent[f])
            if (g.face_size(other) >= 7) ++big;
        if (cls.face_class[f] == FaceBadness::very_bad && big < 3)
            out.push_back(
                {kVeryBadFewBigNeighbors, {}, {f}, std::to_string(big) + " big neighbors"});
        if (big < 2)
            out.push_back({kBadFewBigNeighbors, {}, {f}, std::to_string(big) + " big neighbors"});
    }
    return out;
}

bool revalidate(const PlaneGraph& g, const Witness& w) {
    Classification cls = classify(g);
    auto adjacent = adjacent_faces_of(g);
    auto face_size = [&](std::size_t i) { return g.face_size(w.faces[i]); };

    if (w.property == kNot2Connected) {
        if (w.vertices.empty()) return g.vertex_count() <= 2;
        VertexId v = w.vertices[0];
        auto cuts = cut_vertices(g);
        return std::find(cuts.begin(), cuts.end(), v) != cuts.end();
    }
    if (w.property == kShortSeparatingCycle) {
        if (w.vertices.size() > 7) return false;
        // Recover darts along the listed vertices and re-test.
        std::vector<DartId> darts;
        const std::size_t m = w.vertices.size();
        std::vector<EdgeId> used;
        for (std::size_t i = 0; i < m; ++i) {
            VertexId a = w.vertices[i], b = w.vertices[(i + 1) % m];
            DartId found = -1;
            for (DartId d : g.rotation(a)) {
                if (g.head(d) != b) continue;
                if (std::find(used.begin(), used.end(), PlaneGraph::edge_of(d)) != used.end())
                    continue;
                found = d;
                break;
            }
            if (found == -1) return false;
            used.push_back(PlaneGraph::edge_of(found));
            darts.push_back(found);
        }
        return is_separating_cycle(g, darts);
    }
    if (w.property == kSmallAdjacentFaces)
        return w.faces.size() == 2 && adjacent[w.faces[0]].count(w.faces[1]) &&
               face_size(0) + face_size(1) <= 9;
    if (w.property == kLowFacialDegree)
        return w.vertices.size() == 1 && facial_degree(g, w.vertices[0], 3) < 11;
    if (w.property == kLightEdge) {
        if (w.vertices.size() != 2 || w.faces.size() != 2) return false;
        if (face_size(0) < 4 || face_size(1) < 4 || w.faces[0] == w.faces[1]) return false;
        if (!vertices_adjacent(g, w.vertices[0], w.vertices[1])) return false;
        int a = facial_degree(g, w.vertices[0], 3), b = facial_degree(g, w.vertices[1], 3);
        return std::min(a, b) <= 11 && std::max(a, b) <= 12;
    }
    if (w.property == kCubicEdgeOnTwo5Faces)
        return w.vertices.size() == 2 && g.degree(w.vertices[0]) == 3 &&
               g.degree(w.vertices[1]) == 3 && vertices_adjacent(g, w.vertices[0], w.vertices[1]) &&
               face_size(0) == 5 && face_size(1) == 5;
    if (w.property == kSmallFaceNearCubic7Face) {
        if (w.faces.size() != 2 || face_size(0) != 7 || face_size(1) >= 7) return false;
        for (VertexId v : g.face_vertices(w.faces[0]))
            if (g.degree(v) != 3) return false;
        bool has_triangle = false;
        for (FaceId other : adjacent[w.faces[0]])
            if (g.face_size(other) == 3) has_triangle = true;
        return has_triangle && adjacent[w.faces[0]].count(w.faces[1]) > 0;
    }
    if (w.property == kDangerousPairWithTriangle)
        return w.vertices.size() == 2 &&
               cls.vertex_class[w.vertices[0]] == VertexClass::dangerous &&
               cls.vertex_class[w.vertices[1]] == VertexClass::dangerous &&
               vertices_adjacent(g, w.vertices[0], w.vertices[1]) &&
               !common_small_face(g, w.vertices[0], w.vertices[1]) && !w.faces.empty() &&
               g.face_size(w.faces[0]) == 3;
    if (w.property == kAdjacentDangerousOn6Face) {
        if (w.vertices.size() != 2 || w.faces.size() != 1 || face_size(0) != 6) return false;
        auto on_face = g.face_vertices(w.faces[0]);
        for (VertexId v : w.vertices) {
            if (cls.vertex_class[v] != VertexClass::dangerous) return false;
            if (!std::binary_search(on_face.begin(), on_face.end(), v)) return false;
        }
        return vertices_adjacent(g, w.vertices[0], w.vertices[1]);
    }
    if (w.property == kFourConsecutiveDangerous) {
        if (w.vertices.size() != 4 || w.faces.size() != 1 || face_size(0) < 6) return false;
        const auto& boundary = g.face(w.faces[0]).boundary;
        const int m = static_cast<int>(boundary.size());
        for (int i = 0; i < m; ++i) {
            bool match = true;
            for (int k = 0; k < 4; ++k) {
                VertexId v = g.origin(boundary[(i + k) % m]);
                if (v != w.vertices[k] || cls.vertex_class[v] != VertexClass::dangerous)
                    match = false;
            }
            if (match) return true;
        }
        return false;
    }
    if (w.property == kVeryBadFewBigNeighbors || w.property == kBadFewBigNeighbors) {
        if (w.faces.size() != 1) return false;
        FaceId f = w.faces[0];
        int big = 0;
        for (FaceId other : adjacent[f])
            if (g.face_size(other) >= 7) ++big;
        if (w.property == kVeryBadFewBigNeighbors)
            return cls.face_class[f] == FaceBadness::very_bad && big < 3;
        return is_bad(cls.face_class[f]) && big < 2;
    }
    return false;
}

}  // namespace chroma
