#include "chroma/io.hpp"

#include <cstring>
#include <sstream>

#include <json.hpp>

namespace chroma {

using ordered_json = nlohmann::ordered_json;

PlaneGraph read_rotation_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<int, std::vector<int>>> rows;
    int max_id = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head)) continue;  // blank
        if (head.empty() || head.back() != ':')
            throw ParseError("expected \"<vertex>:\"", line_no);
        int v = 0;
        try {
            v = std::stoi(head.substr(0, head.size() - 1));
        } catch (const std::exception&) {
            throw ParseError("bad vertex id \"" + head + "\"", line_no);
        }
        if (v < 1) throw ParseError("vertex ids are 1-based", line_no);
        std::vector<int> neighbors;
        std::string tok;
        while (fields >> tok) {
            try {
                neighbors.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("bad neighbor id \"" + tok + "\"", line_no);
            }
            if (neighbors.back() < 1) throw ParseError("vertex ids are 1-based", line_no);
            max_id = std::max(max_id, neighbors.back());
        }
        if (neighbors.empty()) throw ParseError("vertex without neighbors", line_no);
        max_id = std::max(max_id, v);
        rows.push_back({v, std::move(neighbors)});
    }
    if (rows.empty()) throw ParseError("no rotation lines found");

    std::vector<std::vector<VertexId>> adjacency(max_id);
    std::vector<char> defined(max_id, 0);
    for (auto& [v, neighbors] : rows) {
        if (defined[v - 1]) throw ParseError("vertex " + std::to_string(v) + " defined twice");
        defined[v - 1] = 1;
        for (int& u : neighbors) --u;
        adjacency[v - 1].assign(neighbors.begin(), neighbors.end());
    }
    for (int v = 0; v < max_id; ++v)
        if (!defined[v])
            throw ParseError("vertex " + std::to_string(v + 1) + " has no rotation line");
    return PlaneGraph::from_rotation(adjacency);
}

std::string write_rotation_text(const PlaneGraph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << (v + 1) << ":";
        for (DartId d : g.rotation(v)) out << ' ' << (g.head(d) + 1);
        out << '\n';
    }
    return out.str();
}

std::vector<PlaneGraph> read_planar_code(const std::vector<unsigned char>& bytes) {
    std::size_t pos = 0;
    const std::size_t header_len = std::strlen(kPlanarCodeHeader);
    if (bytes.size() >= header_len &&
        std::memcmp(bytes.data(), kPlanarCodeHeader, header_len) == 0)
        pos = header_len;

    std::vector<PlaneGraph> graphs;
    while (pos < bytes.size()) {
        int n = bytes[pos++];
        if (n == 0) throw ParseError("planar_code graph with zero vertices");
        std::vector<std::vector<VertexId>> adjacency(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size()) throw ParseError("truncated planar_code stream");
                int u = bytes[pos++];
                if (u == 0) break;
                if (u > n) throw ParseError("planar_code neighbor id exceeds vertex count");
                adjacency[v].push_back(u - 1);
            }
        }
        graphs.push_back(PlaneGraph::from_rotation(adjacency));
    }
    return graphs;
}

std::vector<unsigned char> write_planar_code(const std::vector<PlaneGraph>& graphs) {
    std::vector<unsigned char> bytes(kPlanarCodeHeader, kPlanarCodeHeader + std::strlen(kPlanarCodeHeader));
    for (const PlaneGraph& g : graphs) {
        if (g.vertex_count() >= 256)
            throw GraphError("planar_code supports at most 255 vertices");
        bytes.push_back(static_cast<unsigned char>(g.vertex_count()));
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            for (DartId d : g.rotation(v))
                bytes.push_back(static_cast<unsigned char>(g.head(d) + 1));
            bytes.push_back(0);
        }
    }
    return bytes;
}

Coloring read_coloring_text(const std::string& text, int vertex_count, int k) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    Coloring coloring;
    coloring.color.assign(vertex_count, 0);
    int max_color = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        int v, c;
        if (!(fields >> v)) continue;
        if (!(fields >> c)) throw ParseError("expected \"<vertex> <color>\"", line_no);
        if (v < 1 || v > vertex_count) throw ParseError("vertex id out of range", line_no);
        if (c < 1) throw ParseError("colors are positive", line_no);
        coloring.color[v - 1] = c;
        max_color = std::max(max_color, c);
    }
    coloring.k = k > 0 ? k : max_color;
    return coloring;
}

std::string write_coloring_text(const Coloring& coloring) {
    std::ostringstream out;
    for (std::size_t v = 0; v < coloring.color.size(); ++v)
        if (coloring.color[v] != 0) out << (v + 1) << ' ' << coloring.color[v] << '\n';
    return out.str();
}

ReductionScript read_reduction_script(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad script JSON: ") + e.what());
    }
    ReductionScript script;
    script.k = doc.value("k", 11);
    auto to_vertices = [](const ordered_json& arr) {
        std::vector<VertexId> out;
        for (const auto& x : arr) out.push_back(x.get<int>() - 1);
        return out;
    };
    for (const auto& part : doc.value("parts", ordered_json::array())) {
        ReductionPart p;
        p.vertices = to_vertices(part.at("vertices"));
        if (part.contains("representatives")) p.representatives = to_vertices(part["representatives"]);
        script.parts.push_back(std::move(p));
    }
    if (doc.contains("uncolored")) script.uncolored = to_vertices(doc["uncolored"]);
    return script;
}

namespace {

ordered_json vertices_1based(const std::vector<VertexId>& vs) {
    ordered_json arr = ordered_json::array();
    for (VertexId v : vs) arr.push_back(v + 1);
    return arr;
}

ordered_json element_json(const ElementRef& e) {
    return ordered_json{{"kind", e.kind == ElementRef::vertex ? "vertex" : "face"},
                        {"id", e.kind == ElementRef::vertex ? e.id + 1 : e.id}};
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["property"] = w.property;
    j["vertices"] = vertices_1based(w.vertices);
    j["faces"] = w.faces;
    if (!w.detail.empty()) j["detail"] = w.detail;
    return j;
}

}  // namespace

std::string face_census_json(const PlaneGraph& g) {
    ordered_json j;
    j["schema"] = "facial-chroma/faces/1";
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = g.face_count();
    j["eulerCharacteristic"] = g.euler_characteristic();
    ordered_json faces = ordered_json::array();
    for (FaceId f = 0; f < g.face_count(); ++f) {
        ordered_json entry;
        entry["id"] = f;
        entry["size"] = g.face_size(f);
        ordered_json walk = ordered_json::array();
        for (DartId d : g.face(f).boundary) walk.push_back(g.origin(d) + 1);
        entry["boundary"] = walk;
        faces.push_back(entry);
    }
    j["census"] = faces;
    return j.dump(2);
}

std::string coloring_report_json(const PlaneGraph& g, const Coloring& coloring, bool success,
                                 int chromatic, int stuck_vertex) {
    ordered_json j;
    j["schema"] = "facial-chroma/coloring/1";
    j["success"] = success;
    j["k"] = coloring.k;
    if (chromatic > 0) j["chromaticNumber"] = chromatic;
    j["colorsUsed"] = coloring.colors_used();
    if (stuck_vertex >= 0) j["stuckVertex"] = stuck_vertex + 1;
    ordered_json colors = ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (coloring.color[v] != 0)
            colors.push_back(ordered_json{{"vertex", v + 1}, {"color", coloring.color[v]}});
    j["coloring"] = colors;
    return j.dump(2);
}

std::string violations_json(const std::vector<std::pair<VertexId, VertexId>>& violations) {
    ordered_json j;
    j["schema"] = "facial-chroma/verify/1";
    j["valid"] = violations.empty();
    ordered_json pairs = ordered_json::array();
    for (auto [u, v] : violations) pairs.push_back(ordered_json::array({u + 1, v + 1}));
    j["violations"] = pairs;
    return j.dump(2);
}

std::string discharge_json(const PlaneGraph& g, const ChargeLedger& ledger,
                           const AuditReport& report) {
    ordered_json j;
    j["schema"] = "facial-chroma/discharge/1";
    j["totalCharge"] = report.total.to_string();
    j["conserved"] = report.conserved;
    ordered_json vertices = ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        vertices.push_back(ordered_json{{"vertex", v + 1},
                                        {"charge", ledger.vertex_charge[v].to_string()}});
    j["vertexCharges"] = vertices;
    ordered_json faces = ordered_json::array();
    for (FaceId f = 0; f < g.face_count(); ++f)
        faces.push_back(ordered_json{{"face", f},
                                     {"size", g.face_size(f)},
                                     {"charge", ledger.face_charge[f].to_string()}});
    j["faceCharges"] = faces;
    ordered_json transfers = ordered_json::array();
    for (const Transfer& t : ledger.transfers)
        transfers.push_back(ordered_json{{"rule", t.rule},
                                         {"from", element_json(t.from)},
                                         {"to", element_json(t.to)},
                                         {"amount", t.amount.to_string()}});
    j["transfers"] = transfers;
    ordered_json negatives = ordered_json::array();
    for (const AuditEntry& e : report.negatives)
        negatives.push_back(ordered_json{{"element", element_json(e.element)},
                                         {"charge", e.final_charge.to_string()}});
    j["negative"] = negatives;
    ordered_json flags = ordered_json::array();
    for (const Transfer& t : report.r5_small_targets)
        flags.push_back(ordered_json{{"from", element_json(t.from)},
                                     {"to", element_json(t.to)},
                                     {"faceSize", g.face_size(t.to.id)}});
    j["r5SmallTargets"] = flags;
    return j.dump(2);
}

std::string witnesses_json(const std::vector<Witness>& minimality,
                           const std::vector<Witness>& patterns) {
    ordered_json j;
    j["schema"] = "facial-chroma/check/1";
    j["clean"] = minimality.empty() && patterns.empty();
    ordered_json a = ordered_json::array();
    for (const Witness& w : minimality) a.push_back(witness_json(w));
    j["minimality"] = a;
    ordered_json b = ordered_json::array();
    for (const Witness& w : patterns) b.push_back(witness_json(w));
    j["patterns"] = b;
    return j.dump(2);
}

std::string stats_json(const PlaneGraph& g,
                       const std::vector<std::pair<FaceId, BoundaryStats>>& stats) {
    ordered_json j;
    j["schema"] = "facial-chroma/stats/1";
    ordered_json faces = ordered_json::array();
    bool all_hold = true;
    for (const auto& [f, s] : stats) {
        ordered_json entry;
        entry["face"] = f;
        entry["size"] = g.face_size(f);
        entry["dgs"] = s.counts.dgs;
        entry["sfe"] = s.counts.sfe;
        entry["fce"] = s.counts.fce;
        entry["bad"] = s.counts.bad;
        entry["vbd"] = s.counts.vbd;
        entry["typesValid"] = s.types_valid;
        if (s.types_valid) {
            entry["dgsOccurrences"] = s.dgs_occurrences;
            entry["alpha"] = s.alpha;
            entry["beta"] = s.beta;
            entry["gamma"] = s.gamma;
            entry["delta"] = s.delta;
            entry["eps0"] = s.eps0;
            entry["eps1"] = s.eps1;
            bool sum_identity =
                s.alpha + s.beta + s.gamma + s.delta + s.eps0 + s.eps1 == s.dgs_occurrences;
            bool balance_identity = s.alpha - s.beta + s.eps0 == s.delta + s.eps1;
            entry["sumIdentity"] = sum_identity;
            entry["balanceIdentity"] = balance_identity;
            all_hold = all_hold && sum_identity && balance_identity;
        }
        faces.push_back(entry);
    }
    j["identitiesHold"] = all_hold;
    j["faces"] = faces;
    return j.dump(2);
}

std::string reduction_json(const ReductionReport& report) {
    static const char* names[] = {"success", "minor-uncolorable", "lift-conflict",
                                  "extension-stuck", "improper"};
    ordered_json j;
    j["schema"] = "facial-chroma/reduce/1";
    j["outcome"] = names[static_cast<int>(report.outcome)];
    j["minorChromatic"] = report.minor_chromatic;
    ordered_json conflicts = ordered_json::array();
    for (auto [a, b] : report.lift_conflicts)
        conflicts.push_back(ordered_json::array({a + 1, b + 1}));
    j["liftConflicts"] = conflicts;
    j["listSizes"] = report.list_sizes;
    if (report.stuck) j["stuckVertex"] = *report.stuck + 1;
    ordered_json colors = ordered_json::array();
    for (std::size_t v = 0; v < report.final_coloring.color.size(); ++v)
        if (report.final_coloring.color[v] != 0)
            colors.push_back(
                ordered_json{{"vertex", static_cast<int>(v) + 1},
                             {"color", report.final_coloring.color[v]}});
    j["coloring"] = colors;
    return j.dump(2);
}

std::string hunt_json(const std::vector<HuntRecord>& records, int l, int k) {
    ordered_json j;
    j["schema"] = "facial-chroma/hunt/1";
    j["l"] = l;
    j["k"] = k;
    int counterexamples = 0;
    ordered_json rs = ordered_json::array();
    for (const HuntRecord& r : records) {
        if (r.counterexample) ++counterexamples;
        rs.push_back(ordered_json{{"seed", r.seed},
                                  {"n", r.n},
                                  {"chromatic", r.chromatic},
                                  {"counterexample", r.counterexample}});
    }
    j["counterexamples"] = counterexamples;
    j["results"] = rs;
    return j.dump(2);
}

}  // namespace chroma
