#include <doctest.h>

#include <numeric>
#include <random>

#include "chroma/coloring.hpp"
#include "chroma/generators.hpp"
#include "test_helpers.hpp"

using namespace chroma;

namespace {

Coloring make_coloring(int k, std::vector<int> colors) { return Coloring{k, std::move(colors)}; }

std::vector<VertexId> identity_order(int n) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace

TEST_CASE("verify on the 9-cycle") {
    PlaneGraph g = cycle_graph(9);
    CHECK(verify(g, 3, make_coloring(5, {1, 2, 3, 4, 1, 2, 3, 4, 5})).empty());

    auto violations = verify(g, 3, make_coloring(4, {1, 2, 3, 4, 1, 2, 3, 4, 1}));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == std::pair<VertexId, VertexId>{0, 8});

    CHECK_THROWS_AS(verify(g, 3, make_coloring(5, {1, 2, 3, 4, 1, 2, 3, 4, 0})), GraphError);
}

TEST_CASE("six colors cannot be enough for the second tight graph") {
    PlaneGraph g = tight_example(2);
    // Spot-check a few 6-colorings; the derived adjacency is complete.
    for (int shift = 0; shift < 3; ++shift) {
        std::vector<int> colors(7);
        for (int v = 0; v < 7; ++v) colors[v] = 1 + (v + shift) % 6;
        CHECK(!verify(g, 2, make_coloring(6, colors)).empty());
    }
    CHECK(exact_chromatic(g, 2).chromatic_number == 7);
}

TEST_CASE("greedy coloring") {
    PlaneGraph k4 = named_graph("tetrahedron");
    auto result = greedy_color(k4, 1, 4, identity_order(4));
    CHECK(result.success());
    CHECK(verify(k4, 1, result.coloring).empty());

    PlaneGraph g2 = tight_example(2);
    auto ok = greedy_color(g2, 2, 7, identity_order(7));
    CHECK(ok.success());
    CHECK(ok.coloring.colors_used() == 7);
    CHECK(verify(g2, 2, ok.coloring).empty());

    auto stuck = greedy_color(g2, 2, 6, identity_order(7));
    CHECK(!stuck.success());
    CHECK(*stuck.stuck == 6);  // the seventh vertex in order

    CHECK_THROWS_AS(greedy_color(k4, 1, 4, {0, 1, 2, 2}), GraphError);
}

TEST_CASE("exact chromatic numbers") {
    CHECK(exact_chromatic(cycle_graph(9), 3).chromatic_number == 5);
    CHECK(exact_chromatic(tight_example(1), 1).chromatic_number == 4);
    CHECK(exact_chromatic(tight_example(2), 2).chromatic_number == 7);
    CHECK(exact_chromatic(tight_example(3), 3).chromatic_number == 10);

    // A tree at l = 0 has no constraints.
    PlaneGraph path = testing::build({{2}, {1, 3}, {2}});
    CHECK(exact_chromatic(path, 0).chromatic_number == 1);

    auto result = exact_chromatic(cycle_graph(9), 3);
    CHECK(verify(cycle_graph(9), 3, result.witness).empty());
}

TEST_CASE("exact solver agrees with brute force over the corpus") {
    for (const PlaneGraph& g : testing::test_corpus(25, 10)) {
        SimpleGraph derived = to_simple_graph(facial_adjacency_graph(g, 3));
        ChromaticResult result = chromatic_number(derived);
        CHECK(result.chromatic_number == testing::chromatic_brute(derived));
        // Witness is a proper coloring using exactly that many colors.
        CHECK(result.witness.colors_used() == result.chromatic_number);
        for (int u = 0; u < derived.n; ++u)
            for (int v : derived.adj[u])
                CHECK(result.witness.color[u] != result.witness.color[v]);
    }
}

TEST_CASE("solver budget is enforced") {
    SolverBudget tiny;
    tiny.max_vertices = 4;
    CHECK_THROWS_AS(exact_chromatic(cycle_graph(9), 2, tiny), BudgetError);
}

TEST_CASE("list coloring brute force") {
    SimpleGraph k5 = SimpleGraph::complete(5);
    ListAssignment nested;
    for (int i = 1; i <= 5; ++i) {
        std::vector<int> list(i);
        std::iota(list.begin(), list.end(), 1);
        nested.lists.push_back(list);
    }
    auto colored = list_color_brute(k5, nested);
    REQUIRE(colored.has_value());
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK((*colored)[u] != (*colored)[v]);

    SimpleGraph k2 = SimpleGraph::complete(2);
    CHECK(!list_color_brute(k2, ListAssignment{{{1}, {1}}}).has_value());
}

TEST_CASE("nested-list clique instances color greedily") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int t = 2 + static_cast<int>(rng() % 6);
        SimpleGraph clique = SimpleGraph::complete(t);
        ListAssignment lists;
        lists.lists.resize(t);
        for (int i = 0; i < t; ++i) {
            int size = i + 1 + static_cast<int>(rng() % 3);
            std::set<int> list;
            list.insert(1 + static_cast<int>(rng() % 3));
            while (static_cast<int>(list.size()) < size)
                list.insert(1 + static_cast<int>(rng() % (2 * t)));
            lists.lists[i].assign(list.begin(), list.end());
        }
        CHECK(list_color_brute(clique, lists).has_value());
    }
}

TEST_CASE("gallai tree recognition") {
    CHECK(is_gallai_tree(SimpleGraph::cycle(5)));
    CHECK(is_gallai_tree(SimpleGraph::cycle(7)));
    CHECK(!is_gallai_tree(SimpleGraph::cycle(4)));
    CHECK(is_gallai_tree(SimpleGraph::complete(4)));

    // K4 minus an edge. Vertices 2,3 are the nonadjacent pair.
    SimpleGraph k4e = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(!is_gallai_tree(k4e));

    // Two triangles joined at a cut vertex: every block complete.
    SimpleGraph bowtie =
        SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(is_gallai_tree(bowtie));

    SimpleGraph disconnected = SimpleGraph::from_edges(2, {});
    CHECK_THROWS_AS(is_gallai_tree(disconnected), GraphError);
}

TEST_CASE("degree choosability oracle") {
    SimpleGraph k4e = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(degree_choosable(k4e, 2 * k4e.edge_count()));

    CHECK(!degree_choosable(SimpleGraph::complete(3), 12));
    CHECK(!degree_choosable(SimpleGraph::cycle(5), 20));
    CHECK(degree_choosable(SimpleGraph::cycle(4), 16));
}

TEST_CASE("canonical list patterns enumerate set partitions") {
    // With singleton lists the canonical patterns are exactly the set
    // partitions of the vertices, so the counts are Bell numbers.
    const long bell[] = {0, 1, 2, 5, 15, 52};
    for (int n = 1; n <= 5; ++n) {
        SimpleGraph g = SimpleGraph::complete(n);
        long count = 0;
        for_each_canonical_list_assignment(g, std::vector<int>(n, 1), 2 * n + 2,
                                           [&](const ListAssignment&) {
                                               ++count;
                                               return true;
                                           });
        CHECK(count == bell[n]);
    }

    // The color-universe cap prunes patterns that need too many colors.
    SimpleGraph tri = SimpleGraph::complete(3);
    long capped = 0;
    for_each_canonical_list_assignment(tri, {1, 1, 1}, 1, [&](const ListAssignment&) {
        ++capped;
        return true;
    });
    CHECK(capped == 1);  // only the all-shared pattern fits in one color
}

TEST_CASE("choosability agrees with the gallai characterization up to 5 vertices") {
    // All connected graphs on <= 5 vertices, one per isomorphism class.
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
        std::set<std::uint64_t> seen;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask & (1u << i)) edges.push_back(slots[i]);
            SimpleGraph g = SimpleGraph::from_edges(n, edges);
            if (!g.connected()) continue;

            // Canonical form under vertex permutations.
            std::uint64_t canon = ~0ull;
            std::sort(perm.begin(), perm.end());
            do {
                std::uint64_t key = 0;
                for (std::size_t i = 0; i < slots.size(); ++i) {
                    auto [u, v] = slots[i];
                    if (g.adjacent(perm[u], perm[v])) key |= 1ull << i;
                }
                canon = std::min(canon, key);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!seen.insert(canon).second) continue;

            bool choosable = degree_choosable(g, 2 * std::max(1, g.edge_count()));
            CHECK(choosable == !is_gallai_tree(g));
        }
    }
}
