#include <doctest.h>

#include <numeric>
#include "chroma/generators.hpp"
#include "chroma/structure.hpp"
#include "test_helpers.hpp"

using namespace chroma;

namespace {

int count_property(const std::vector<Witness>& ws, const std::string& property) {
    int n = 0;
    for (const Witness& w : ws)
        if (w.property == property) ++n;
    return n;
}

}  // namespace

TEST_CASE("classification of named graphs") {
    PlaneGraph cube = named_graph("cube");
    Classification cls = classify(cube);
    for (VertexId v = 0; v < 8; ++v) CHECK(cls.vertex_class[v] == VertexClass::dangerous);
    for (FaceId f = 0; f < cube.face_count(); ++f) {
        CHECK(cls.face_counts[f].sfe == 0);
        CHECK(cls.face_counts[f].dgs == 4);
    }

    PlaneGraph dodeca = named_graph("dodecahedron");
    Classification dcls = classify(dodeca);
    for (VertexId v = 0; v < 20; ++v) CHECK(dcls.vertex_class[v] == VertexClass::safe);
    for (FaceId f = 0; f < dodeca.face_count(); ++f)
        CHECK(dcls.face_class[f] == FaceBadness::very_bad);

    PlaneGraph k4 = named_graph("tetrahedron");
    Classification kcls = classify(k4);
    for (VertexId v = 0; v < 4; ++v) CHECK(kcls.vertex_class[v] == VertexClass::dangerous);
    for (FaceId f = 0; f < 4; ++f) CHECK(kcls.face_class[f] == FaceBadness::other);

    PlaneGraph ico = named_graph("icosahedron");
    Classification icls = classify(ico);
    for (VertexId v = 0; v < 12; ++v) CHECK(icls.vertex_class[v] == VertexClass::plain);
}

TEST_CASE("bad face counting is consistent") {
    for (const PlaneGraph& g : testing::test_corpus(40, 14)) {
        Classification cls = classify(g);
        int bad = 0, very_bad = 0;
        for (FaceId f = 0; f < g.face_count(); ++f) {
            if (is_bad(cls.face_class[f])) ++bad;
            if (cls.face_class[f] == FaceBadness::very_bad) ++very_bad;
            CHECK(cls.face_counts[f].bad >= cls.face_counts[f].vbd);
        }
        CHECK(bad >= very_bad);
    }
}

TEST_CASE("simple cycle enumeration") {
    PlaneGraph k4 = named_graph("tetrahedron");
    // K4: four triangles and three 4-cycles.
    auto cycles = simple_cycles_up_to(k4, 7);
    int len3 = 0, len4 = 0;
    for (const auto& c : cycles) {
        if (c.size() == 3) ++len3;
        if (c.size() == 4) ++len4;
    }
    CHECK(len3 == 4);
    CHECK(len4 == 3);
    CHECK(cycles.size() == 7);

    // No cycle of K4 is separating.
    for (const auto& c : cycles) CHECK(!is_separating_cycle(k4, c));

    // The octahedron's equatorial 4-cycles separate the two apexes; its
    // triangles bound faces and separate nothing.
    PlaneGraph octa = named_graph("octahedron");
    int separating = 0;
    for (const auto& c : simple_cycles_up_to(octa, 4)) {
        if (is_separating_cycle(octa, c)) {
            ++separating;
            CHECK(c.size() == 4);
        }
    }
    CHECK(separating == 3);
}

TEST_CASE("separating cycles agree with the arc oracle") {
    for (const PlaneGraph& g : testing::test_corpus(40, 12)) {
        for (const auto& cycle : simple_cycles_up_to(g, 7))
            CHECK(is_separating_cycle(g, cycle) == testing::separating_oracle(g, cycle));
    }
}

TEST_CASE("minimality witnesses on K4") {
    PlaneGraph k4 = named_graph("tetrahedron");
    auto ws = minimality_witnesses(k4);
    CHECK(count_property(ws, kSmallAdjacentFaces) == 6);  // all face pairs, 3+3 <= 9
    CHECK(count_property(ws, kLowFacialDegree) == 4);     // deg3 = 3 everywhere
    CHECK(count_property(ws, kNot2Connected) == 0);
    CHECK(count_property(ws, kShortSeparatingCycle) == 0);
    CHECK(count_property(ws, kLightEdge) == 0);  // no (>=4)-faces at all
    for (const Witness& w : ws) CHECK(revalidate(k4, w));
}

TEST_CASE("minimality witnesses on the dodecahedron") {
    PlaneGraph g = named_graph("dodecahedron");
    auto ws = minimality_witnesses(g);
    CHECK(count_property(ws, kLowFacialDegree) == 20);  // deg3 = 9 < 11
    CHECK(count_property(ws, kNot2Connected) == 0);
    CHECK(count_property(ws, kSmallAdjacentFaces) == 0);  // 5+5 = 10 > 9
    for (const Witness& w : ws) CHECK(revalidate(g, w));
}

TEST_CASE("minimality witnesses on a long cycle") {
    PlaneGraph c30 = cycle_graph(30);
    auto ws = minimality_witnesses(c30);
    CHECK(count_property(ws, kLowFacialDegree) == 30);  // deg3 = 6
    CHECK(count_property(ws, kShortSeparatingCycle) == 0);
    CHECK(count_property(ws, kNot2Connected) == 0);
}

TEST_CASE("cut vertices are reported") {
    // Two triangles sharing vertex 3 (1-based).
    PlaneGraph bowtie = testing::build({{2, 3}, {3, 1}, {1, 2, 4, 5}, {5, 3}, {3, 4}});
    auto ws = minimality_witnesses(bowtie);
    REQUIRE(count_property(ws, kNot2Connected) == 1);
    for (const Witness& w : ws)
        if (w.property == kNot2Connected) {
            REQUIRE(w.vertices.size() == 1);
            CHECK(w.vertices[0] == 2);
            CHECK(revalidate(bowtie, w));
        }
}

TEST_CASE("light edges between big faces") {
    PlaneGraph cube = named_graph("cube");
    auto ws = minimality_witnesses(cube);
    // Every cube edge separates two 4-faces and deg3 = 6 on both ends.
    CHECK(count_property(ws, kLightEdge) == 12);
    for (const Witness& w : ws) CHECK(revalidate(cube, w));
}

TEST_CASE("pattern witnesses on the dodecahedron") {
    PlaneGraph g = named_graph("dodecahedron");
    auto ws = pattern_witnesses(g);
    CHECK(count_property(ws, kCubicEdgeOnTwo5Faces) == 30);   // every edge
    CHECK(count_property(ws, kVeryBadFewBigNeighbors) == 12); // no (>=7)-faces at all
    CHECK(count_property(ws, kBadFewBigNeighbors) == 12);
    CHECK(count_property(ws, kAdjacentDangerousOn6Face) == 0);
    for (const Witness& w : ws) CHECK(revalidate(g, w));
}

TEST_CASE("pattern witnesses on the icosahedron and cube") {
    auto ico = pattern_witnesses(named_graph("icosahedron"));
    CHECK(count_property(ico, kCubicEdgeOnTwo5Faces) == 0);
    CHECK(count_property(ico, kVeryBadFewBigNeighbors) == 0);
    CHECK(count_property(ico, kBadFewBigNeighbors) == 0);

    CHECK(pattern_witnesses(named_graph("cube")).empty());
}

TEST_CASE("witnesses re-validate across the corpus") {
    for (const PlaneGraph& g : testing::test_corpus(25, 12)) {
        for (const Witness& w : minimality_witnesses(g)) CHECK(revalidate(g, w));
        for (const Witness& w : pattern_witnesses(g)) CHECK(revalidate(g, w));
    }
}

TEST_CASE("boundary path stats on a face with a shared triangle") {
    // A 12-gon with one ear: two adjacent rim vertices of degree 3 whose
    // shared small face is a triangle.
    // Rim 0..11, apex 12 over the edge {0,1}.
    std::vector<VertexId> rim(12);
    std::iota(rim.begin(), rim.end(), 0);
    std::vector<VertexId> outer = {0, 12, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    PlaneGraph g = plane_graph_from_faces(13, {rim, {0, 1, 12}, outer});

    FaceId big = -1;
    for (FaceId f = 0; f < g.face_count(); ++f)
        if (g.face_size(f) == 12) big = f;
    REQUIRE(big != -1);

    BoundaryStats stats = boundary_path_stats(g, big);
    REQUIRE(stats.types_valid);
    CHECK(stats.dgs_occurrences == 2);
    CHECK(stats.delta == 1);
    CHECK(stats.alpha + stats.beta + stats.gamma + stats.delta + stats.eps0 + stats.eps1 ==
          stats.dgs_occurrences);
    CHECK(stats.alpha - stats.beta + stats.eps0 == stats.delta + stats.eps1);
}

TEST_CASE("boundary path stats inapplicable cases") {
    PlaneGraph dodeca = named_graph("dodecahedron");
    CHECK(!boundary_path_stats(dodeca, 0).types_valid);  // faces too small

    PlaneGraph c12 = cycle_graph(12);
    BoundaryStats stats = boundary_path_stats(c12, 0);
    CHECK(!stats.types_valid);  // no dangerous vertices
    CHECK(stats.dgs_occurrences == 0);
}

TEST_CASE("counting identities across the corpus") {
    for (const PlaneGraph& g : testing::test_corpus(80, 14)) {
        Classification cls = classify(g);
        for (FaceId f = 0; f < g.face_count(); ++f) {
            BoundaryStats s = boundary_path_stats(g, f, cls);
            if (!s.types_valid) continue;
            CHECK(s.alpha + s.beta + s.gamma + s.delta + s.eps0 + s.eps1 == s.dgs_occurrences);
            CHECK(s.alpha - s.beta + s.eps0 == s.delta + s.eps1);
        }
    }
}
