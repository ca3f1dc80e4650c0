#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/discharging.hpp"
#include "chroma/plane_graph.hpp"
#include "chroma/reduction.hpp"
#include "chroma/structure.hpp"

namespace chroma {

// Rotation text: one line per vertex, "v: n1 n2 n3 ..." with neighbors in
// clockwise order and 1-based dense ids.  '#' starts a comment; blank
// lines are ignored.  Writing preserves the stored rotation order, so
// read-then-write reproduces the input up to whitespace and comments.
PlaneGraph read_rotation_text(const std::string& text);
std::string write_rotation_text(const PlaneGraph& g);

// planar_code: optional ">>planar_code<<" header, then per graph one
// byte n (< 256) followed by n zero-terminated neighbor lists in
// rotation order.  Reading preserves list order byte-exactly.
std::vector<PlaneGraph> read_planar_code(const std::vector<unsigned char>& bytes);
std::vector<unsigned char> write_planar_code(const std::vector<PlaneGraph>& graphs);

inline const char* kPlanarCodeHeader = ">>planar_code<<";

// Coloring text: lines "v c" (1-based vertex, color).  Vertices missing
// from the file stay uncolored.
Coloring read_coloring_text(const std::string& text, int vertex_count, int k = 0);
std::string write_coloring_text(const Coloring& coloring);

// Reduction scripts are JSON:
//   {"k": 11, "parts": [{"vertices": [...], "representatives": [...]}],
//    "uncolored": [...]}        (vertex ids 1-based)
ReductionScript read_reduction_script(const std::string& text);

// JSON reports (stable field order, exact rational charge strings).
std::string face_census_json(const PlaneGraph& g);
std::string coloring_report_json(const PlaneGraph& g, const Coloring& coloring, bool success,
                                 int chromatic = 0, int stuck_vertex = -1);
std::string violations_json(const std::vector<std::pair<VertexId, VertexId>>& violations);
std::string discharge_json(const PlaneGraph& g, const ChargeLedger& ledger,
                           const AuditReport& report);
std::string witnesses_json(const std::vector<Witness>& minimality,
                           const std::vector<Witness>& patterns);
std::string stats_json(const PlaneGraph& g, const std::vector<std::pair<FaceId, BoundaryStats>>& stats);
std::string reduction_json(const ReductionReport& report);

struct HuntRecord {
    std::uint64_t seed = 0;
    int n = 0;
    int chromatic = 0;
    bool counterexample = false;
};
std::string hunt_json(const std::vector<HuntRecord>& records, int l, int k);

}  // namespace chroma
