#include "chroma/discharging.hpp"

#include <map>
#include <numeric>
#include <set>

namespace chroma {

std::string Charge::to_string() const {
    int num = twelfths, den = 12;
    int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    if (twelfths == 0) return "0";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Charge ChargeLedger::total() const {
    Charge t;
    for (Charge c : vertex_charge) t += c;
    for (Charge c : face_charge) t += c;
    return t;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    ChargeLedger ledger;
    ledger.vertex_charge.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        ledger.vertex_charge[v] = Charge::units(g.degree(v) - 4);
    ledger.face_charge.resize(g.face_count());
    for (FaceId f = 0; f < g.face_count(); ++f)
        ledger.face_charge[f] = Charge::units(g.face_size(f) - 4);
    return ledger;
}

namespace {

void pay(ChargeLedger& ledger, const std::string& rule, ElementRef from, ElementRef to,
         int twelfths) {
    Charge amount{twelfths};
    (from.kind == ElementRef::vertex ? ledger.vertex_charge[from.id]
                                     : ledger.face_charge[from.id]) -= amount;
    (to.kind == ElementRef::vertex ? ledger.vertex_charge[to.id] : ledger.face_charge[to.id]) +=
        amount;
    ledger.transfers.push_back({rule, from, to, amount});
}

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger) {
    Classification cls = classify(g);
    std::vector<std::set<FaceId>> adjacent(g.face_count());
    for (auto [a, b] : g.face_adjacency()) {
        adjacent[a].insert(b);
        adjacent[b].insert(a);
    }

    // R1: per boundary occurrence.
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (g.face_size(f) < 5) continue;
        for (DartId d : g.face(f).boundary) {
            VertexId v = g.origin(d);
            if (cls.vertex_class[v] == VertexClass::safe)
                pay(ledger, "R1", {ElementRef::face, f}, {ElementRef::vertex, v}, 4);
            else if (cls.vertex_class[v] == VertexClass::dangerous)
                pay(ledger, "R1", {ElementRef::face, f}, {ElementRef::vertex, v}, 6);
        }
    }

    // R2/R3: payments from (>=7)-faces, R4 from 6-faces.
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (g.face_size(f) >= 7) {
            for (FaceId other : adjacent[f]) {
                if (g.face_size(other) == 3)
                    pay(ledger, "R2", {ElementRef::face, f}, {ElementRef::face, other}, 4);
                if (is_bad(cls.face_class[other]))
                    pay(ledger, "R3", {ElementRef::face, f}, {ElementRef::face, other}, 2);
            }
        } else if (g.face_size(f) == 6) {
            for (FaceId other : adjacent[f])
                if (cls.face_class[other] == FaceBadness::very_bad)
                    pay(ledger, "R4", {ElementRef::face, f}, {ElementRef::face, other}, 1);
        }
    }

    // R5: once per qualifying (vertex, face) pair.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 5) continue;
        std::set<FaceId> triangles_at_v;
        std::set<FaceId> incident;
        for (FaceId f : g.incident_faces(v)) {
            incident.insert(f);
            if (g.face_size(f) == 3) triangles_at_v.insert(f);
        }
        for (FaceId f : incident) {
            if (g.face_size(f) < 4) continue;
            int count = 0;
            for (FaceId t : triangles_at_v)
                if (adjacent[f].count(t)) ++count;
            if (count >= 2)
                pay(ledger, "R5", {ElementRef::vertex, v}, {ElementRef::face, f}, 8);
        }
    }
    return ledger;
}

AuditReport audit(const PlaneGraph& g, const ChargeLedger& ledger) {
    AuditReport report;
    report.total = ledger.total();

    static const std::map<std::string, int> rule_amount = {
        {"R1", 0 /* 4 or 6 */}, {"R2", 4}, {"R3", 2}, {"R4", 1}, {"R5", 8}};
    bool amounts_ok = true;
    for (const Transfer& t : ledger.transfers) {
        auto it = rule_amount.find(t.rule);
        if (it == rule_amount.end()) {
            amounts_ok = false;
            continue;
        }
        if (t.rule == "R1") {
            if (t.amount.twelfths != 4 && t.amount.twelfths != 6) amounts_ok = false;
        } else if (t.amount.twelfths != it->second) {
            amounts_ok = false;
        }
        if (t.rule == "R5" && t.to.kind == ElementRef::face && g.face_size(t.to.id) < 7)
            report.r5_small_targets.push_back(t);
    }
    report.conserved = amounts_ok && report.total == Charge::units(-8);

    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (ledger.vertex_charge[v].negative())
            report.negatives.push_back({{ElementRef::vertex, v}, ledger.vertex_charge[v]});
    for (FaceId f = 0; f < g.face_count(); ++f)
        if (ledger.face_charge[f].negative())
            report.negatives.push_back({{ElementRef::face, f}, ledger.face_charge[f]});
    return report;
}

}  // namespace chroma
