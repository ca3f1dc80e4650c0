#include "chroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace chroma {

int Coloring::colors_used() const {
    std::set<int> used;
    for (int c : color)
        if (c != 0) used.insert(c);
    return static_cast<int>(used.size());
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw GraphError("bad edge");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw GraphError("duplicate edge");
    }
    return g;
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return from_edges(n, edges);
}

SimpleGraph SimpleGraph::cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
    return from_edges(n, edges);
}

bool SimpleGraph::adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (const auto& list : adj) total += static_cast<int>(list.size());
    return total / 2;
}

bool SimpleGraph::connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

SimpleGraph to_simple_graph(const FacialAdjacency& adj) {
    SimpleGraph g;
    g.n = adj.vertex_count();
    g.adj = adj.neighbors;
    return g;
}

std::vector<std::pair<VertexId, VertexId>> verify(const PlaneGraph& g, int l,
                                                  const Coloring& coloring) {
    if (static_cast<int>(coloring.color.size()) != g.vertex_count())
        throw GraphError("coloring size does not match the graph");
    if (!coloring.total()) throw GraphError("coloring is not total");
    std::vector<std::pair<VertexId, VertexId>> violations;
    FacialAdjacency adj = facial_adjacency_graph(g, l);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId u : adj.neighbors[v])
            if (u > v && coloring.color[u] == coloring.color[v]) violations.push_back({v, u});
    return violations;
}

GreedyResult greedy_color(const PlaneGraph& g, int l, int k, const std::vector<VertexId>& order) {
    if (static_cast<int>(order.size()) != g.vertex_count())
        throw GraphError("order is not a permutation of the vertices");
    std::vector<char> seen(g.vertex_count(), 0);
    for (VertexId v : order) {
        g.check_vertex(v);
        if (seen[v]) throw GraphError("order is not a permutation of the vertices");
        seen[v] = 1;
    }

    FacialAdjacency adj = facial_adjacency_graph(g, l);
    GreedyResult result;
    result.coloring.k = k;
    result.coloring.color.assign(g.vertex_count(), 0);
    std::vector<char> used(k + 1, 0);
    for (VertexId v : order) {
        std::fill(used.begin(), used.end(), 0);
        for (VertexId u : adj.neighbors[v]) {
            int c = result.coloring.color[u];
            if (c >= 1 && c <= k) used[c] = 1;
        }
        int chosen = 0;
        for (int c = 1; c <= k; ++c)
            if (!used[c]) {
                chosen = c;
                break;
            }
        if (chosen == 0) {
            result.stuck = v;
            return result;
        }
        result.coloring.color[v] = chosen;
    }
    return result;
}

namespace {

struct MaskGraph {
    int n;
    std::vector<std::uint64_t> adj;
};

MaskGraph to_masks(const SimpleGraph& g, const SolverBudget& budget) {
    if (g.n > budget.max_vertices || g.n > 64)
        throw BudgetError("graph with " + std::to_string(g.n) +
                          " vertices exceeds the exact solver budget");
    MaskGraph m{g.n, std::vector<std::uint64_t>(g.n, 0)};
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) m.adj[u] |= std::uint64_t{1} << v;
    return m;
}

std::vector<int> greedy_clique(const MaskGraph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(g.adj[a]) > std::popcount(g.adj[b]);
    });
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        std::uint64_t common = g.adj[seed];
        for (int v : order) {
            if (common & (std::uint64_t{1} << v)) {
                clique.push_back(v);
                common &= g.adj[v];
            }
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

std::vector<int> dsatur_coloring(const MaskGraph& g) {
    std::vector<int> color(g.n, 0);
    std::vector<std::uint64_t> neighbor_colors(g.n, 0);  // bitset over colors 1..64
    for (int step = 0; step < g.n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v]) continue;
            int sat = std::popcount(neighbor_colors[v]);
            int deg = std::popcount(g.adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = 1;
        while (neighbor_colors[pick] & (std::uint64_t{1} << (c - 1))) ++c;
        color[pick] = c;
        for (int v = 0; v < g.n; ++v)
            if (g.adj[pick] & (std::uint64_t{1} << v))
                neighbor_colors[v] |= std::uint64_t{1} << (c - 1);
    }
    return color;
}

struct KColorSearch {
    const MaskGraph& g;
    int k;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    std::vector<int> color;
    std::vector<std::uint64_t> neighbor_colors;
    int colored = 0;
    int max_used = 0;

    KColorSearch(const MaskGraph& graph, int colors, std::uint64_t node_budget)
        : g(graph), k(colors), max_nodes(node_budget), color(graph.n, 0),
          neighbor_colors(graph.n, 0) {}

    bool assign(int v, int c, const std::function<bool()>& cont) {
        color[v] = c;
        ++colored;
        int prev_max = max_used;
        max_used = std::max(max_used, c);
        std::vector<int> touched;
        for (int u = 0; u < g.n; ++u)
            if ((g.adj[v] & (std::uint64_t{1} << u)) &&
                !(neighbor_colors[u] & (std::uint64_t{1} << (c - 1)))) {
                neighbor_colors[u] |= std::uint64_t{1} << (c - 1);
                touched.push_back(u);
            }
        bool ok = cont();
        if (!ok) {
            for (int u : touched) neighbor_colors[u] &= ~(std::uint64_t{1} << (c - 1));
            color[v] = 0;
            --colored;
            max_used = prev_max;
        }
        return ok;
    }

    bool search() {
        if (++nodes > max_nodes) throw BudgetError("exact coloring search exceeded node budget");
        if (colored == g.n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v]) continue;
            int sat = std::popcount(neighbor_colors[v]);
            int deg = std::popcount(g.adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int limit = std::min(k, max_used + 1);  // new colors introduced in order
        for (int c = 1; c <= limit; ++c) {
            if (neighbor_colors[pick] & (std::uint64_t{1} << (c - 1))) continue;
            if (assign(pick, c, [&] { return search(); })) return true;
        }
        return false;
    }
};

}  // namespace

ChromaticResult chromatic_number(const SimpleGraph& g, const SolverBudget& budget) {
    if (g.n == 0) return {0, Coloring{0, {}}};
    MaskGraph m = to_masks(g, budget);

    std::vector<int> clique = greedy_clique(m);
    std::vector<int> heuristic = dsatur_coloring(m);
    int ub = *std::max_element(heuristic.begin(), heuristic.end());
    int lb = static_cast<int>(clique.size());

    ChromaticResult result;
    result.chromatic_number = ub;
    result.witness.k = ub;
    result.witness.color = heuristic;

    for (int k = lb; k < ub; ++k) {
        KColorSearch search(m, k, budget.max_nodes);
        bool ok = true;
        // Fix the clique colors up front; its vertices are pairwise
        // adjacent so colors 1..|clique| are forced anyway.
        std::function<bool(std::size_t)> precolor = [&](std::size_t i) -> bool {
            if (i == clique.size()) return search.search();
            return search.assign(clique[i], static_cast<int>(i) + 1,
                                 [&] { return precolor(i + 1); });
        };
        if (static_cast<int>(clique.size()) > k)
            ok = false;
        else
            ok = precolor(0);
        if (ok) {
            result.chromatic_number = k;
            result.witness.k = k;
            result.witness.color = search.color;
            break;
        }
    }
    return result;
}

ChromaticResult exact_chromatic(const PlaneGraph& g, int l, const SolverBudget& budget) {
    return chromatic_number(to_simple_graph(facial_adjacency_graph(g, l)), budget);
}

std::optional<std::vector<int>> list_color_brute(const SimpleGraph& g,
                                                 const ListAssignment& lists) {
    if (static_cast<int>(lists.lists.size()) != g.n)
        throw GraphError("list assignment size does not match the graph");

    // Most constrained vertex first.
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return lists.lists[a].size() < lists.lists[b].size(); });

    std::vector<int> color(g.n, 0);
    std::function<bool(int)> go = [&](int idx) -> bool {
        if (idx == g.n) return true;
        int v = order[idx];
        for (int c : lists.lists[v]) {
            bool clash = false;
            for (int u : g.adj[v])
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            if (go(idx + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return color;
}

namespace {

// Biconnected components as edge sets, via the classic lowpoint DFS.
struct BlockFinder {
    const SimpleGraph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int counter = 0;

    explicit BlockFinder(const SimpleGraph& graph) : g(graph), num(graph.n, 0), low(graph.n, 0) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = ++counter;
        for (int u : g.adj[v]) {
            if (u == parent) continue;
            if (num[u] == 0) {
                edge_stack.push_back({v, u});
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= num[v]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(v, u)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (num[u] < num[v]) {
                edge_stack.push_back({v, u});
                low[v] = std::min(low[v], num[u]);
            }
        }
    }
};

}  // namespace

bool is_gallai_tree(const SimpleGraph& g) {
    if (!g.connected()) throw GraphError("graph is not connected");
    BlockFinder finder(g);
    finder.dfs(0, -1);
    for (const auto& block : finder.blocks) {
        std::set<int> vs;
        for (auto [u, v] : block) {
            vs.insert(u);
            vs.insert(v);
        }
        const int bn = static_cast<int>(vs.size());
        const int be = static_cast<int>(block.size());
        if (be == bn * (bn - 1) / 2) continue;  // complete (includes K2 bridges)
        if (be == bn && bn % 2 == 1) {
            std::map<int, int> deg;
            for (auto [u, v] : block) {
                ++deg[u];
                ++deg[v];
            }
            bool cycle = std::all_of(deg.begin(), deg.end(),
                                     [](const auto& kv) { return kv.second == 2; });
            if (cycle) continue;  // odd cycle
        }
        return false;
    }
    return true;
}

bool for_each_canonical_list_assignment(const SimpleGraph& g, const std::vector<int>& sizes,
                                        int max_colors,
                                        const std::function<bool(const ListAssignment&)>& visit) {
    const int n = g.n;
    if (n > 16) throw BudgetError("list-pattern enumeration limited to 16 vertices");

    // Occurrence sets ordered large-to-small so that shared lists are
    // tried first.
    std::vector<unsigned> subsets;
    for (unsigned s = 1; s < (1u << n); ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::vector<unsigned> suffix_union(subsets.size() + 1, 0);
    for (int i = static_cast<int>(subsets.size()) - 1; i >= 0; --i)
        suffix_union[i] = suffix_union[i + 1] | subsets[i];

    std::vector<int> residual = sizes;
    std::vector<std::pair<unsigned, int>> chosen;  // (occurrence set, copies)
    bool completed = true;

    std::function<bool(std::size_t, int)> go = [&](std::size_t idx, int colors_left) -> bool {
        bool done = true;
        int max_residual = 0;
        for (int v = 0; v < n; ++v) {
            if (residual[v] > 0) done = false;
            max_residual = std::max(max_residual, residual[v]);
        }
        if (done) {
            ListAssignment lists;
            lists.lists.resize(n);
            int color = 0;
            for (auto [mask, copies] : chosen)
                for (int c = 0; c < copies; ++c) {
                    ++color;
                    for (int v = 0; v < n; ++v)
                        if (mask & (1u << v)) lists.lists[v].push_back(color);
                }
            return visit(lists);
        }
        if (idx == subsets.size()) return true;
        if (max_residual > colors_left) return true;  // cannot be completed
        for (int v = 0; v < n; ++v)
            if (residual[v] > 0 && !(suffix_union[idx] & (1u << v))) return true;

        unsigned mask = subsets[idx];
        int cap = colors_left;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) cap = std::min(cap, residual[v]);
        for (int copies = cap; copies >= 0; --copies) {
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) residual[v] -= copies;
            if (copies > 0) chosen.push_back({mask, copies});
            bool keep_going = go(idx + 1, colors_left - copies);
            if (copies > 0) chosen.pop_back();
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) residual[v] += copies;
            if (!keep_going) return false;
        }
        return true;
    };

    completed = go(0, max_colors);
    return completed;
}

bool degree_choosable(const SimpleGraph& g, int max_colors) {
    if (!g.connected()) throw GraphError("graph is not connected");
    if (g.n > 8) throw BudgetError("choosability oracle limited to 8 vertices");
    std::vector<int> sizes(g.n);
    for (int v = 0; v < g.n; ++v) sizes[v] = static_cast<int>(g.adj[v].size());
    bool all_colorable = for_each_canonical_list_assignment(
        g, sizes, max_colors,
        [&](const ListAssignment& lists) { return list_color_brute(g, lists).has_value(); });
    return all_colorable;
}

}  // namespace chroma
