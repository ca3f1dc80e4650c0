#include <doctest.h>

#include <numeric>
#include "chroma/discharging.hpp"
#include "chroma/generators.hpp"
#include "test_helpers.hpp"

using namespace chroma;

namespace {

// A triangle whose three neighboring faces are 7-faces: inner triangle
// 0,1,2 joined by spokes to a 12-cycle (vertices 3..14).
PlaneGraph triangle_in_ring() {
    std::vector<VertexId> ring(12);
    std::iota(ring.begin(), ring.end(), 3);
    auto arc = [&](int from, int count) {
        std::vector<VertexId> out;
        for (int i = 0; i <= count; ++i) out.push_back(3 + (from + i) % 12);
        return out;
    };
    std::vector<std::vector<VertexId>> faces;
    faces.push_back({0, 1, 2});
    std::vector<VertexId> f1{1, 0};
    auto a1 = arc(0, 4);  // 3..7
    f1.insert(f1.end(), a1.begin(), a1.end());
    std::vector<VertexId> f2{2, 1};
    auto a2 = arc(4, 4);  // 7..11
    f2.insert(f2.end(), a2.begin(), a2.end());
    std::vector<VertexId> f3{0, 2};
    auto a3 = arc(8, 4);  // 11..14,3
    f3.insert(f3.end(), a3.begin(), a3.end());
    faces.push_back(f1);
    faces.push_back(f2);
    faces.push_back(f3);
    faces.push_back(ring);
    return plane_graph_from_faces(15, faces);
}

Charge charge_of(const ChargeLedger& ledger, ElementRef ref) {
    return ref.kind == ElementRef::vertex ? ledger.vertex_charge[ref.id]
                                          : ledger.face_charge[ref.id];
}

}  // namespace

TEST_CASE("initial charges sum to -8") {
    PlaneGraph k4 = named_graph("tetrahedron");
    ChargeLedger ledger = initial_charges(k4);
    for (VertexId v = 0; v < 4; ++v) CHECK(ledger.vertex_charge[v] == Charge::units(-1));
    for (FaceId f = 0; f < 4; ++f) CHECK(ledger.face_charge[f] == Charge::units(-1));
    CHECK(ledger.total() == Charge::units(-8));

    PlaneGraph dodeca = named_graph("dodecahedron");
    ChargeLedger dl = initial_charges(dodeca);
    for (VertexId v = 0; v < 20; ++v) CHECK(dl.vertex_charge[v] == Charge::units(-1));
    for (FaceId f = 0; f < 12; ++f) CHECK(dl.face_charge[f] == Charge::units(1));
    CHECK(dl.total() == Charge::units(-8));

    for (const PlaneGraph& g : testing::test_corpus(40, 14))
        CHECK(initial_charges(g).total() == Charge::units(-8));
}

TEST_CASE("charge rendering") {
    CHECK(Charge{-8}.to_string() == "-2/3");
    CHECK(Charge{0}.to_string() == "0");
    CHECK(Charge{12}.to_string() == "1");
    CHECK(Charge{-96}.to_string() == "-8");
    CHECK(Charge{1}.to_string() == "1/12");
    CHECK(Charge{6}.to_string() == "1/2");
}

TEST_CASE("a 3-face among 7-faces finishes at zero") {
    PlaneGraph g = triangle_in_ring();
    std::multiset<int> sizes;
    for (FaceId f = 0; f < g.face_count(); ++f) sizes.insert(g.face_size(f));
    REQUIRE(sizes == std::multiset<int>{3, 7, 7, 7, 12});

    ChargeLedger ledger = apply_rules(g, initial_charges(g));
    FaceId triangle = -1;
    for (FaceId f = 0; f < g.face_count(); ++f)
        if (g.face_size(f) == 3) triangle = f;
    CHECK(ledger.face_charge[triangle] == Charge::units(0));

    int r2_into_triangle = 0;
    for (const Transfer& t : ledger.transfers)
        if (t.rule == "R2" && t.to.kind == ElementRef::face && t.to.id == triangle)
            ++r2_into_triangle;
    CHECK(r2_into_triangle == 3);

    // The triangle's corners are dangerous vertices on two (>=5)-faces:
    // -1 + 2 * 1/2 = 0.
    for (VertexId v : {0, 1, 2}) CHECK(ledger.vertex_charge[v] == Charge{0});
}

TEST_CASE("dodecahedron discharge") {
    PlaneGraph g = named_graph("dodecahedron");
    ChargeLedger ledger = apply_rules(g, initial_charges(g));
    for (VertexId v = 0; v < 20; ++v) CHECK(ledger.vertex_charge[v] == Charge{0});
    for (FaceId f = 0; f < 12; ++f) CHECK(ledger.face_charge[f] == Charge{-8});  // -2/3
    CHECK(ledger.total() == Charge::units(-8));

    AuditReport report = audit(g, ledger);
    CHECK(report.conserved);
    CHECK(report.negatives.size() == 12);
    CHECK(report.r5_small_targets.empty());
}

TEST_CASE("cube discharge") {
    PlaneGraph g = named_graph("cube");
    ChargeLedger ledger = apply_rules(g, initial_charges(g));
    CHECK(ledger.transfers.empty());  // no rule touches 4-faces
    for (VertexId v = 0; v < 8; ++v) CHECK(ledger.vertex_charge[v] == Charge::units(-1));
    for (FaceId f = 0; f < 6; ++f) CHECK(ledger.face_charge[f] == Charge{0});

    AuditReport report = audit(g, ledger);
    CHECK(report.conserved);
    CHECK(report.negatives.size() == 8);
}

TEST_CASE("icosahedron discharge") {
    PlaneGraph g = named_graph("icosahedron");
    ChargeLedger ledger = apply_rules(g, initial_charges(g));
    CHECK(ledger.transfers.empty());
    for (VertexId v = 0; v < 12; ++v) CHECK(ledger.vertex_charge[v] == Charge::units(1));
    for (FaceId f = 0; f < 20; ++f) CHECK(ledger.face_charge[f] == Charge::units(-1));
    CHECK(audit(g, ledger).conserved);
}

TEST_CASE("conservation and rule amounts over the corpus") {
    for (const PlaneGraph& g : testing::test_corpus(60, 14)) {
        ChargeLedger ledger = apply_rules(g, initial_charges(g));
        CHECK(ledger.total() == Charge::units(-8));
        AuditReport report = audit(g, ledger);
        CHECK(report.conserved);
        Classification cls = classify(g);
        for (const Transfer& t : ledger.transfers) {
            if (t.rule == "R1") {
                CHECK(t.from.kind == ElementRef::face);
                CHECK(g.face_size(t.from.id) >= 5);
                CHECK((t.amount == Charge{4} || t.amount == Charge{6}));
            } else if (t.rule == "R2") {
                CHECK(g.face_size(t.from.id) >= 7);
                CHECK(g.face_size(t.to.id) == 3);
            } else if (t.rule == "R3") {
                CHECK(g.face_size(t.from.id) >= 7);
                CHECK(is_bad(cls.face_class[t.to.id]));
            } else if (t.rule == "R4") {
                CHECK(g.face_size(t.from.id) == 6);
                CHECK(cls.face_class[t.to.id] == FaceBadness::very_bad);
            } else if (t.rule == "R5") {
                CHECK(t.from.kind == ElementRef::vertex);
                CHECK(g.degree(t.from.id) >= 5);
                CHECK(t.amount == Charge{8});
            } else {
                FAIL("unknown rule");
            }
        }
    }
}

TEST_CASE("discharge is deterministic") {
    PlaneGraph g = random_plane_graph(12, 99, 0.8);
    ChargeLedger a = apply_rules(g, initial_charges(g));
    ChargeLedger b = apply_rules(g, initial_charges(g));
    REQUIRE(a.transfers.size() == b.transfers.size());
    for (std::size_t i = 0; i < a.transfers.size(); ++i) {
        CHECK(a.transfers[i].rule == b.transfers[i].rule);
        CHECK(a.transfers[i].from == b.transfers[i].from);
        CHECK(a.transfers[i].to == b.transfers[i].to);
        CHECK(a.transfers[i].amount == b.transfers[i].amount);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        CHECK(charge_of(a, {ElementRef::vertex, v}) == charge_of(b, {ElementRef::vertex, v}));
}

TEST_CASE("R5 fires for a vertex between two triangles on a big face") {
    // 7-gon 0..6; triangles (3,4,7) and (4,5,8) sit outside on the edges
    // at vertex 4; a pendant vertex 9 raises deg(4) to 5.
    PlaneGraph g = plane_graph_from_faces(
        10, {{0, 1, 2, 3, 4, 5, 6},
             {3, 7, 4},
             {4, 8, 5},
             {0, 6, 5, 8, 4, 9, 4, 7, 3, 2, 1}});
    REQUIRE(g.degree(4) == 5);

    ChargeLedger ledger = apply_rules(g, initial_charges(g));
    std::vector<Transfer> r5;
    for (const Transfer& t : ledger.transfers)
        if (t.rule == "R5") r5.push_back(t);
    REQUIRE(r5.size() == 2);  // onto the 7-face and onto the outer face
    std::multiset<int> target_sizes;
    for (const Transfer& t : r5) {
        CHECK(t.from.kind == ElementRef::vertex);
        CHECK(t.from.id == 4);
        target_sizes.insert(g.face_size(t.to.id));
    }
    CHECK(target_sizes == std::multiset<int>{7, 11});
    CHECK(ledger.total() == Charge::units(-8));

    // Triangles flanking the vertex receive R2 from the 7-face, not R5.
    int r2_to_triangles = 0;
    for (const Transfer& t : ledger.transfers)
        if (t.rule == "R2" && g.face_size(t.to.id) == 3) ++r2_to_triangles;
    CHECK(r2_to_triangles >= 2);

    // Nothing qualifies in a wheel: the hub's faces are all triangles.
    PlaneGraph w6 = named_graph("W6");
    for (const Transfer& t : apply_rules(w6, initial_charges(w6)).transfers)
        CHECK(t.rule != "R5");
}
