#include <doctest.h>

#include <numeric>

#include "chroma/generators.hpp"
#include "chroma/io.hpp"
#include "chroma/plane_graph.hpp"
#include "test_helpers.hpp"

using namespace chroma;
using testing::build;

TEST_CASE("triangle from rotation") {
    PlaneGraph g = build({{2, 3}, {3, 1}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);
    CHECK(g.face_size(0) == 3);
    CHECK(g.face_size(1) == 3);
    CHECK(g.euler_characteristic() == 2);
}

TEST_CASE("K4 has four triangular faces") {
    PlaneGraph g = named_graph("tetrahedron");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    for (FaceId f = 0; f < g.face_count(); ++f) CHECK(g.face_size(f) == 3);

    // Any rotation of a plane embedding round-trips through the builder.
    PlaneGraph again = read_rotation_text(write_rotation_text(g));
    CHECK(again.face_count() == 4);
}

TEST_CASE("path graph walks each bridge twice") {
    PlaneGraph g = build({{2}, {1, 3}, {2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.face_count() == 1);
    CHECK(g.face_size(0) == 4);

    auto faces = g.incident_faces(1);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0] == 0);
    CHECK(faces[1] == 0);

    CHECK(g.face_adjacency().empty());
}

TEST_CASE("euler characteristic on named graphs") {
    for (const char* name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
        PlaneGraph g = named_graph(name);
        CHECK(g.euler_characteristic() == 2);
    }
    CHECK(named_graph("dodecahedron").vertex_count() == 20);
    CHECK(named_graph("dodecahedron").edge_count() == 30);
    CHECK(named_graph("dodecahedron").face_count() == 12);
}

TEST_CASE("incident faces in rotation order") {
    PlaneGraph cube = named_graph("cube");
    for (VertexId v = 0; v < cube.vertex_count(); ++v) {
        auto faces = cube.incident_faces(v);
        REQUIRE(faces.size() == 3);
        for (FaceId f : faces) CHECK(cube.face_size(f) == 4);
    }
}

TEST_CASE("face adjacency pairs") {
    PlaneGraph triangle = build({{2, 3}, {3, 1}, {1, 2}});
    auto pairs = triangle.face_adjacency();
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<FaceId, FaceId>{0, 1});

    CHECK(named_graph("tetrahedron").face_adjacency().size() == 6);
}

TEST_CASE("builder rejects bad input") {
    CHECK_THROWS_AS(PlaneGraph::from_rotation({}), GraphError);
    CHECK_THROWS_AS(build({{1}}), GraphError);                        // loop
    CHECK_THROWS_AS(build({{2, 2}, {1}}), GraphError);                // unmatched
    CHECK_THROWS_AS(build({{2}, {1}, {4}, {3}}), GraphError);         // disconnected
    // K5 admits no plane rotation system.
    CHECK_THROWS_AS(build({{2, 3, 4, 5}, {1, 3, 4, 5}, {1, 2, 4, 5}, {1, 2, 3, 5}, {1, 2, 3, 4}}),
                    GraphError);
}

TEST_CASE("embedding invariants over the corpus") {
    for (const PlaneGraph& g : testing::test_corpus(60, 14)) {
        CHECK(g.euler_characteristic() == 2);
        int total = 0;
        for (FaceId f = 0; f < g.face_count(); ++f) total += g.face_size(f);
        CHECK(total == 2 * g.edge_count());

        // Face traversal is independent of the starting dart.
        for (FaceId f = 0; f < g.face_count(); ++f) {
            const auto& boundary = g.face(f).boundary;
            for (DartId d : boundary) {
                std::vector<DartId> walk;
                DartId cur = d;
                do {
                    walk.push_back(cur);
                    cur = g.next_in_face(cur);
                } while (cur != d);
                REQUIRE(walk.size() == boundary.size());
                auto offset = std::find(boundary.begin(), boundary.end(), d) - boundary.begin();
                for (std::size_t i = 0; i < walk.size(); ++i)
                    CHECK(walk[i] == boundary[(offset + i) % boundary.size()]);
            }
        }
    }
}

TEST_CASE("round-trip through rotation text preserves the embedding") {
    for (const PlaneGraph& g : testing::test_corpus(20, 12)) {
        PlaneGraph h = read_rotation_text(write_rotation_text(g));
        REQUIRE(h.vertex_count() == g.vertex_count());
        REQUIRE(h.edge_count() == g.edge_count());
        REQUIRE(h.face_count() == g.face_count());
        CHECK(write_rotation_text(h) == write_rotation_text(g));
    }
}
