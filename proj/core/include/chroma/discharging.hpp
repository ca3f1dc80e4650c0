#pragma once

#include <string>
#include <vector>

#include "chroma/plane_graph.hpp"
#include "chroma/structure.hpp"

namespace chroma {

// Exact charge in twelfths; every rule amount is a multiple of 1/12, so
// no floating point appears anywhere in the ledger.
struct Charge {
    int twelfths = 0;

    static Charge units(int u) { return {12 * u}; }
    Charge& operator+=(Charge o) {
        twelfths += o.twelfths;
        return *this;
    }
    Charge& operator-=(Charge o) {
        twelfths -= o.twelfths;
        return *this;
    }
    bool operator==(const Charge&) const = default;
    bool negative() const { return twelfths < 0; }
    std::string to_string() const;  // reduced fraction, e.g. "-2/3"
};

struct ElementRef {
    enum Kind { vertex, face } kind;
    int id;
    bool operator==(const ElementRef&) const = default;
};

struct Transfer {
    std::string rule;  // "R1".."R5"
    ElementRef from, to;
    Charge amount;
};

struct ChargeLedger {
    std::vector<Charge> vertex_charge;
    std::vector<Charge> face_charge;
    std::vector<Transfer> transfers;

    Charge total() const;
};

// ch(v) = d(v) - 4 and ch(f) = r(f) - 4; the totals always sum to -8.
ChargeLedger initial_charges(const PlaneGraph& g);

// The five redistribution rules:
//   R1  a (>=5)-face pays 1/3 to each incident safe vertex and 1/2 to
//       each incident dangerous vertex, once per boundary occurrence;
//   R2  a (>=7)-face pays 1/3 to each adjacent 3-face;
//   R3  a (>=7)-face pays 1/6 to each adjacent bad face;
//   R4  a 6-face pays 1/12 to each adjacent very-bad face;
//   R5  a (>=5)-vertex pays 2/3 to an incident (>=4)-face when two
//       3-faces are incident to the vertex and adjacent to that face.
// Face-to-face rules pay once per adjacent face pair regardless of how
// many edges the pair shares.
ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger);

struct AuditEntry {
    ElementRef element;
    Charge final_charge;
};

struct AuditReport {
    bool conserved = false;     // total still -8 and all amounts rule-exact
    Charge total;
    std::vector<AuditEntry> negatives;
    std::vector<Transfer> r5_small_targets;  // R5 payments to faces of size < 7
};

AuditReport audit(const PlaneGraph& g, const ChargeLedger& ledger);

}  // namespace chroma
