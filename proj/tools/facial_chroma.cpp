// facial-chroma: facial-coloring analysis of plane graphs given by
// rotation systems.  See --help per subcommand.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chroma/coloring.hpp"
#include "chroma/discharging.hpp"
#include "chroma/facial.hpp"
#include "chroma/generators.hpp"
#include "chroma/io.hpp"
#include "chroma/plane_graph.hpp"
#include "chroma/reduction.hpp"
#include "chroma/structure.hpp"

namespace {

using namespace chroma;

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open " + path);
    return read_stream(file);
}

std::vector<PlaneGraph> load_graphs(const std::string& path, bool planar_code) {
    std::string data = read_input(path);
    bool has_header = data.rfind(kPlanarCodeHeader, 0) == 0;
    if (planar_code || has_header) {
        std::vector<unsigned char> bytes(data.begin(), data.end());
        return read_planar_code(bytes);
    }
    std::vector<PlaneGraph> graphs;
    graphs.push_back(read_rotation_text(data));
    return graphs;
}

PlaneGraph load_graph(const std::string& path, bool planar_code) {
    auto graphs = load_graphs(path, planar_code);
    if (graphs.size() != 1)
        throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()));
    return std::move(graphs.front());
}

struct Output {
    bool json = false;
    std::string path = "-";

    void emit(const std::string& text) const {
        if (path == "-") {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw ParseError("cannot open " + path + " for writing");
        file << text;
        if (!text.empty() && text.back() != '\n') file << '\n';
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_flag("--json", out.json, "emit a JSON report");
    cmd->add_option("--out", out.path, "output path ('-' for stdout)");
}

int unsigned_env(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (!value) return fallback;
    int parsed = std::atoi(value);
    return parsed >= 1 ? parsed : fallback;
}

// ---- faces ---------------------------------------------------------------

int run_faces(const std::string& file, bool planar_code, const Output& out) {
    std::ostringstream text;
    for (const PlaneGraph& g : load_graphs(file, planar_code)) {
        if (out.json) {
            text << face_census_json(g) << '\n';
            continue;
        }
        text << "V=" << g.vertex_count() << " E=" << g.edge_count() << " F=" << g.face_count()
             << " euler=" << g.euler_characteristic() << '\n';
        for (FaceId f = 0; f < g.face_count(); ++f) {
            text << "face " << f << " size " << g.face_size(f) << ':';
            for (DartId d : g.face(f).boundary) text << ' ' << (g.origin(d) + 1);
            text << '\n';
        }
    }
    out.emit(text.str());
    return kExitClean;
}

// ---- color ---------------------------------------------------------------

int run_color(const std::string& file, bool planar_code, int l, int k, bool exact, bool greedy,
              const Output& out) {
    PlaneGraph g = load_graph(file, planar_code);
    if (exact && greedy) throw ParseError("choose one of --exact / --greedy");

    Coloring coloring;
    bool success = false;
    int chromatic = 0;
    int stuck = -1;
    if (greedy) {
        std::vector<VertexId> order(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        GreedyResult result = greedy_color(g, l, k, order);
        coloring = result.coloring;
        success = result.success();
        if (!success) stuck = *result.stuck;
    } else {
        ChromaticResult result = exact_chromatic(g, l);
        chromatic = result.chromatic_number;
        success = chromatic <= k;
        if (success) coloring = result.witness;
        coloring.k = k;
        coloring.color.resize(g.vertex_count(), 0);
    }

    if (out.json) {
        out.emit(coloring_report_json(g, coloring, success, chromatic, stuck));
    } else if (success) {
        out.emit(write_coloring_text(coloring));
    } else {
        std::ostringstream text;
        if (stuck >= 0)
            text << "stuck at vertex " << (stuck + 1) << " with k=" << k << '\n';
        else
            text << "needs " << chromatic << " colors, budget k=" << k << '\n';
        out.emit(text.str());
    }
    return success ? kExitClean : kExitFindings;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& file, bool planar_code, const std::string& coloring_file, int l,
               int k, const Output& out) {
    PlaneGraph g = load_graph(file, planar_code);
    Coloring coloring = read_coloring_text(read_input(coloring_file), g.vertex_count(), k);
    auto violations = verify(g, l, coloring);
    if (out.json) {
        out.emit(violations_json(violations));
    } else {
        std::ostringstream text;
        if (violations.empty()) {
            text << "valid " << l << "-facial coloring\n";
        } else {
            for (auto [u, v] : violations)
                text << "violation: vertices " << (u + 1) << ' ' << (v + 1) << " share color "
                     << coloring.color[u] << '\n';
        }
        out.emit(text.str());
    }
    return violations.empty() ? kExitClean : kExitFindings;
}

// ---- discharge -------------------------------------------------------------

int run_discharge(const std::string& file, bool planar_code, const Output& out) {
    std::ostringstream text;
    for (const PlaneGraph& g : load_graphs(file, planar_code)) {
        ChargeLedger ledger = apply_rules(g, initial_charges(g));
        AuditReport report = audit(g, ledger);
        if (out.json) {
            text << discharge_json(g, ledger, report) << '\n';
            continue;
        }
        text << "total " << report.total.to_string()
             << (report.conserved ? " (conserved)" : " (NOT conserved)") << ", "
             << ledger.transfers.size() << " transfers\n";
        for (const AuditEntry& e : report.negatives)
            text << "negative " << (e.element.kind == ElementRef::vertex ? "vertex " : "face ")
                 << (e.element.kind == ElementRef::vertex ? e.element.id + 1 : e.element.id)
                 << ": " << e.final_charge.to_string() << '\n';
        for (const Transfer& t : report.r5_small_targets)
            text << "R5 onto small face " << t.to.id << " (size " << g.face_size(t.to.id)
                 << ")\n";
    }
    out.emit(text.str());
    return kExitClean;
}

// ---- check -----------------------------------------------------------------

int run_check(const std::string& file, bool planar_code, const Output& out) {
    std::ostringstream text;
    bool clean = true;
    for (const PlaneGraph& g : load_graphs(file, planar_code)) {
        auto minimality = minimality_witnesses(g);
        auto patterns = pattern_witnesses(g);
        clean = clean && minimality.empty() && patterns.empty();
        if (out.json) {
            text << witnesses_json(minimality, patterns) << '\n';
            continue;
        }
        auto describe = [&](const Witness& w) {
            text << w.property;
            if (!w.vertices.empty()) {
                text << " vertices";
                for (VertexId v : w.vertices) text << ' ' << (v + 1);
            }
            if (!w.faces.empty()) {
                text << " faces";
                for (FaceId f : w.faces) text << ' ' << f;
            }
            if (!w.detail.empty()) text << " (" << w.detail << ')';
            text << '\n';
        };
        for (const Witness& w : minimality) describe(w);
        for (const Witness& w : patterns) describe(w);
        if (minimality.empty() && patterns.empty()) text << "clean\n";
    }
    out.emit(text.str());
    return clean ? kExitClean : kExitFindings;
}

// ---- stats -----------------------------------------------------------------

int run_stats(const std::string& file, bool planar_code, const Output& out) {
    std::ostringstream text;
    bool identities_hold = true;
    for (const PlaneGraph& g : load_graphs(file, planar_code)) {
        Classification cls = classify(g);
        std::vector<std::pair<FaceId, BoundaryStats>> collected;
        for (FaceId f = 0; f < g.face_count(); ++f) {
            BoundaryStats s = boundary_path_stats(g, f, cls);
            if (g.face_size(f) >= 9 || s.counts.dgs > 0) collected.push_back({f, s});
            if (s.types_valid) {
                identities_hold = identities_hold &&
                                  s.alpha + s.beta + s.gamma + s.delta + s.eps0 + s.eps1 ==
                                      s.dgs_occurrences &&
                                  s.alpha - s.beta + s.eps0 == s.delta + s.eps1;
            }
        }
        if (out.json) {
            text << stats_json(g, collected) << '\n';
            continue;
        }
        for (const auto& [f, s] : collected) {
            text << "face " << f << " size " << g.face_size(f) << ": dgs=" << s.counts.dgs
                 << " sfe=" << s.counts.sfe << " fce=" << s.counts.fce << " bad=" << s.counts.bad
                 << " vbd=" << s.counts.vbd;
            if (s.types_valid)
                text << " | a=" << s.alpha << " b=" << s.beta << " c=" << s.gamma
                     << " d=" << s.delta << " e0=" << s.eps0 << " e1=" << s.eps1;
            text << '\n';
        }
    }
    if (!out.json) text << (identities_hold ? "identities hold\n" : "IDENTITY VIOLATION\n");
    out.emit(text.str());
    return identities_hold ? kExitClean : kExitFindings;
}

// ---- gen -------------------------------------------------------------------

int run_gen(const PlaneGraph& g, const Output& out) {
    out.emit(write_rotation_text(g));
    return kExitClean;
}

// ---- reduce ----------------------------------------------------------------

int run_reduce(const std::string& file, bool planar_code, const std::string& script_file, int l,
               int k, const Output& out) {
    PlaneGraph g = load_graph(file, planar_code);
    ReductionScript script = read_reduction_script(read_input(script_file));
    if (k > 0) script.k = k;
    ReductionReport report = run_reduction(g, l, script);
    if (out.json) {
        out.emit(reduction_json(report));
    } else {
        std::ostringstream text;
        static const char* names[] = {"success", "minor-uncolorable", "lift-conflict",
                                      "extension-stuck", "improper"};
        text << names[static_cast<int>(report.outcome)] << " (minor needs "
             << report.minor_chromatic << " colors)\n";
        if (!report.list_sizes.empty()) {
            text << "residual list sizes:";
            for (int s : report.list_sizes) text << ' ' << s;
            text << '\n';
        }
        out.emit(text.str());
    }
    return report.success() ? kExitClean : kExitFindings;
}

// ---- hunt ------------------------------------------------------------------

int run_hunt(int count, int n, int l, int k, std::uint64_t seed, double keep, const Output& out) {
    std::vector<HuntRecord> records(count);
    std::atomic<int> next{0};
    int workers = std::min<int>(
        count, unsigned_env("FACIAL_CHROMA_THREADS",
                            std::max(1u, std::thread::hardware_concurrency())));
    auto work = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            PlaneGraph g = random_plane_graph(n, s, keep);
            ChromaticResult result = exact_chromatic(g, l);
            records[i] = {s, g.vertex_count(), result.chromatic_number,
                          result.chromatic_number > k};
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    int counterexamples = 0;
    for (const HuntRecord& r : records)
        if (r.counterexample) ++counterexamples;

    if (out.json) {
        out.emit(hunt_json(records, l, k));
    } else {
        std::ostringstream text;
        for (const HuntRecord& r : records)
            if (r.counterexample)
                text << "counterexample: seed " << r.seed << " needs " << r.chromatic
                     << " colors\n";
        text << count << " graphs, " << counterexamples << " counterexamples\n";
        out.emit(text.str());
    }
    return counterexamples == 0 ? kExitClean : kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"facial coloring toolkit for plane graphs"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string coloring_file, script_file;
    bool planar_code = false;
    int l = 3, k = 11, verify_k = 0, n = 10, count = 100;
    std::uint64_t seed = 1;
    double keep = 1.0;
    bool exact = false, greedy = false;
    Output out;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input graph ('-' for stdin)");
        cmd->add_flag("--planar-code", planar_code,
                      "input is headerless planar_code (detected automatically with header)");
    };

    CLI::App* faces = app.add_subcommand("faces", "face census of the embedding");
    add_input(faces);
    add_output_flags(faces, out);

    CLI::App* color = app.add_subcommand("color", "attempt an l-facial k-coloring");
    add_input(color);
    color->add_option("--l", l, "facial walk length")->required();
    color->add_option("--k", k, "color budget")->required();
    color->add_flag("--exact", exact, "exact search (default)");
    color->add_flag("--greedy", greedy, "greedy in input order");
    add_output_flags(color, out);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a coloring");
    add_input(verify_cmd);
    verify_cmd->add_option("--coloring", coloring_file, "coloring file ('-' for stdin)")
        ->required();
    verify_cmd->add_option("--l", l, "facial walk length")->required();
    verify_cmd->add_option("--k", verify_k, "color budget (defaults to max color used)");
    add_output_flags(verify_cmd, out);

    CLI::App* discharge = app.add_subcommand("discharge", "charge ledger and audit");
    add_input(discharge);
    add_output_flags(discharge, out);

    CLI::App* check = app.add_subcommand("check", "scan structural witnesses");
    add_input(check);
    add_output_flags(check, out);

    CLI::App* stats = app.add_subcommand("stats", "boundary path statistics");
    add_input(stats);
    add_output_flags(stats, out);

    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph as rotation text");
    gen->require_subcommand(1);
    CLI::App* gen_tight = gen->add_subcommand("tight", "tight family member");
    gen_tight->add_option("--l", l, "thread length")->required();
    add_output_flags(gen_tight, out);
    CLI::App* gen_random = gen->add_subcommand("random", "seeded random plane graph");
    gen_random->add_option("--n", n, "vertex count")->required();
    gen_random->add_option("--seed", seed, "seed")->required();
    gen_random->add_option("--keep", keep, "edge keep probability");
    add_output_flags(gen_random, out);
    CLI::App* gen_named = gen->add_subcommand("named", "named reference graph");
    std::string name;
    gen_named->add_option("name", name, "tetrahedron|cube|octahedron|dodecahedron|icosahedron|C<n>|W<n>")
        ->required();
    add_output_flags(gen_named, out);

    CLI::App* reduce = app.add_subcommand("reduce", "run a contract-and-lift script");
    add_input(reduce);
    reduce->add_option("--script", script_file, "script JSON")->required();
    reduce->add_option("--l", l, "facial walk length")->required();
    reduce->add_option("--k", k, "color budget");
    add_output_flags(reduce, out);

    CLI::App* hunt = app.add_subcommand("hunt", "sweep random graphs for high chromatic numbers");
    hunt->add_option("--count", count, "number of graphs")->required();
    hunt->add_option("--n", n, "vertex count")->required();
    hunt->add_option("--l", l, "facial walk length")->required();
    hunt->add_option("--k", k, "color budget")->required();
    hunt->add_option("--seed", seed, "base seed")->required();
    hunt->add_option("--keep", keep, "edge keep probability (default 0.85)");
    add_output_flags(hunt, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (faces->parsed()) return run_faces(file, planar_code, out);
        if (color->parsed()) return run_color(file, planar_code, l, k, exact, greedy, out);
        if (verify_cmd->parsed())
            return run_verify(file, planar_code, coloring_file, l, verify_k, out);
        if (discharge->parsed()) return run_discharge(file, planar_code, out);
        if (check->parsed()) return run_check(file, planar_code, out);
        if (stats->parsed()) return run_stats(file, planar_code, out);
        if (gen->parsed()) {
            if (gen_tight->parsed()) return run_gen(tight_example(l), out);
            if (gen_random->parsed()) return run_gen(random_plane_graph(n, seed, keep), out);
            return run_gen(named_graph(name), out);
        }
        if (reduce->parsed()) return run_reduce(file, planar_code, script_file, l, k, out);
        if (hunt->parsed()) {
            if (!hunt->count("--keep")) keep = 0.85;
            return run_hunt(count, n, l, k, seed, keep, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
