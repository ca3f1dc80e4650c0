#include "chroma/reduction.hpp"

#include <algorithm>
#include <set>

namespace chroma {

namespace {

void validate_parts(const PlaneGraph& g, const std::vector<std::vector<VertexId>>& parts) {
    std::set<VertexId> all;
    for (const auto& part : parts) {
        if (part.empty()) throw GraphError("empty part");
        std::set<VertexId> members;
        for (VertexId v : part) {
            g.check_vertex(v);
            if (!members.insert(v).second) throw GraphError("repeated vertex in part");
            if (!all.insert(v).second) throw GraphError("parts are not disjoint");
        }
        if (static_cast<int>(part.size()) == g.vertex_count())
            throw GraphError("part covers the whole graph");
        // Connectivity of the induced subgraph.
        std::set<VertexId> seen{part[0]};
        std::vector<VertexId> stack{part[0]};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (DartId d : g.rotation(u)) {
                VertexId w = g.head(d);
                if (members.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        if (seen.size() != members.size()) throw GraphError("part does not induce a connected subgraph");
    }
}

}  // namespace

ContractionResult contract(const PlaneGraph& g, const std::vector<std::vector<VertexId>>& parts) {
    validate_parts(g, parts);

    // Mutable dart-level copy.
    std::vector<VertexId> origin(g.dart_count());
    std::vector<std::vector<DartId>> rot(g.vertex_count());
    for (DartId d = 0; d < g.dart_count(); ++d) origin[d] = g.origin(d);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        rot[v].assign(g.rotation(v).begin(), g.rotation(v).end());

    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<char> dart_alive(g.dart_count(), 1);

    auto strip_loops = [&](VertexId u) {
        std::vector<DartId> kept;
        for (DartId d : rot[u]) {
            if (origin[d ^ 1] == u) {
                dart_alive[d] = 0;
            } else {
                kept.push_back(d);
            }
        }
        rot[u] = std::move(kept);
    };

    auto contract_edge = [&](VertexId u, DartId d) {
        VertexId v = origin[d ^ 1];
        auto& ru = rot[u];
        auto& rv = rot[v];
        std::size_t pu = std::find(ru.begin(), ru.end(), d) - ru.begin();
        std::size_t pv = std::find(rv.begin(), rv.end(), d ^ 1) - rv.begin();
        std::vector<DartId> merged;
        merged.reserve(ru.size() + rv.size() - 2);
        for (std::size_t i = 1; i < ru.size(); ++i) merged.push_back(ru[(pu + i) % ru.size()]);
        for (std::size_t i = 1; i < rv.size(); ++i) merged.push_back(rv[(pv + i) % rv.size()]);
        for (DartId moved : rv)
            if (moved != (d ^ 1)) origin[moved] = u;
        dart_alive[d] = dart_alive[d ^ 1] = 0;
        rot[u] = std::move(merged);
        rot[v].clear();
        alive[v] = 0;
        strip_loops(u);
    };

    for (const auto& part : parts) {
        std::set<VertexId> members(part.begin(), part.end());
        while (true) {
            // Lowest alive member owning an edge into the part.
            VertexId pick = -1;
            DartId pick_dart = -1;
            for (VertexId u : members) {
                if (!alive[u]) continue;
                for (DartId d : rot[u])
                    if (members.count(origin[d ^ 1])) {
                        pick = u;
                        pick_dart = d;
                        break;
                    }
                if (pick != -1) break;
            }
            if (pick == -1) break;
            contract_edge(pick, pick_dart);
        }
        int remaining = 0;
        for (VertexId u : members)
            if (alive[u]) ++remaining;
        if (remaining != 1) throw GraphError("part did not contract to a single vertex");
    }

    // Compact vertices and darts.
    std::vector<VertexId> new_id(g.vertex_count(), -1);
    int next_vertex = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) new_id[v] = next_vertex++;

    std::vector<DartId> new_dart(g.dart_count(), -1);
    std::vector<VertexId> new_origin;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!dart_alive[2 * e]) continue;
        new_dart[2 * e] = static_cast<DartId>(new_origin.size());
        new_dart[2 * e + 1] = static_cast<DartId>(new_origin.size()) + 1;
        new_origin.push_back(new_id[origin[2 * e]]);
        new_origin.push_back(new_id[origin[2 * e + 1]]);
    }
    std::vector<std::vector<DartId>> new_rot(next_vertex);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!alive[v]) continue;
        for (DartId d : rot[v]) new_rot[new_id[v]].push_back(new_dart[d]);
    }
    ContractionResult result{
        PlaneGraph::from_darts(next_vertex, std::move(new_origin), std::move(new_rot)), {}};

    result.vertex_map.assign(g.vertex_count(), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) result.vertex_map[v] = new_id[v];
    for (const auto& part : parts) {
        VertexId survivor = -1;
        for (VertexId v : part)
            if (alive[v]) survivor = v;
        for (VertexId v : part) result.vertex_map[v] = new_id[survivor];
    }
    return result;
}

namespace {

void validate_script(const PlaneGraph& g, const ReductionScript& script) {
    std::set<VertexId> in_part, reps, uncolored;
    for (const auto& part : script.parts) {
        for (VertexId v : part.vertices) in_part.insert(v);
        std::set<VertexId> members(part.vertices.begin(), part.vertices.end());
        for (VertexId r : part.representatives) {
            if (!members.count(r)) throw GraphError("representative outside its part");
            reps.insert(r);
        }
    }
    for (VertexId u : script.uncolored) {
        g.check_vertex(u);
        if (!uncolored.insert(u).second) throw GraphError("repeated uncolored vertex");
        if (reps.count(u)) throw GraphError("representative listed as uncolored");
    }
    for (VertexId v : in_part)
        if (!reps.count(v) && !uncolored.count(v))
            throw GraphError("non-representative part vertex " + std::to_string(v + 1) +
                             " must be listed as uncolored");
    if (script.k < 1) throw GraphError("color budget must be positive");
}

}  // namespace

LiftResult lift(const PlaneGraph& g, int l, const ReductionScript& script,
                const ContractionResult& contraction, const Coloring& minor_coloring) {
    validate_script(g, script);
    if (!minor_coloring.total() ||
        static_cast<int>(minor_coloring.color.size()) != contraction.minor.vertex_count())
        throw GraphError("minor coloring must be total");

    std::set<VertexId> uncolored(script.uncolored.begin(), script.uncolored.end());
    std::set<VertexId> in_part;
    std::vector<std::pair<VertexId, int>> rep_list;  // representative -> part index
    for (std::size_t p = 0; p < script.parts.size(); ++p) {
        for (VertexId v : script.parts[p].vertices) in_part.insert(v);
        for (VertexId r : script.parts[p].representatives)
            rep_list.push_back({r, static_cast<int>(p)});
    }

    LiftResult result;
    result.partial.k = minor_coloring.k;
    result.partial.color.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (uncolored.count(v)) continue;
        if (in_part.count(v)) continue;  // representatives handled below
        result.partial.color[v] = minor_coloring.color[contraction.vertex_map[v]];
    }
    for (auto [r, p] : rep_list)
        result.partial.color[r] = minor_coloring.color[contraction.vertex_map[r]];

    FacialAdjacency adj = facial_adjacency_graph(g, l);
    std::sort(rep_list.begin(), rep_list.end());
    for (std::size_t i = 0; i < rep_list.size(); ++i)
        for (std::size_t j = i + 1; j < rep_list.size(); ++j) {
            auto [a, pa] = rep_list[i];
            auto [b, pb] = rep_list[j];
            if (result.partial.color[a] != result.partial.color[b]) continue;
            if (adj.adjacent(a, b)) result.conflicts.push_back({a, b});
        }
    return result;
}

ListAssignment residual_lists(const PlaneGraph& g, int l, const Coloring& partial,
                              const std::vector<VertexId>& uncolored, int k) {
    std::set<VertexId> skip(uncolored.begin(), uncolored.end());
    FacialAdjacency adj = facial_adjacency_graph(g, l);
    ListAssignment lists;
    lists.lists.resize(uncolored.size());
    for (std::size_t i = 0; i < uncolored.size(); ++i) {
        VertexId u = uncolored[i];
        std::vector<char> banned(k + 1, 0);
        for (VertexId w : adj.neighbors[u]) {
            if (skip.count(w)) continue;
            int c = partial.color[w];
            if (c >= 1 && c <= k) banned[c] = 1;
        }
        for (int c = 1; c <= k; ++c)
            if (!banned[c]) lists.lists[i].push_back(c);
    }
    return lists;
}

ReductionReport run_reduction(const PlaneGraph& g, int l, const ReductionScript& script,
                              const SolverBudget& budget) {
    validate_script(g, script);
    ReductionReport report;

    std::vector<std::vector<VertexId>> parts;
    for (const auto& part : script.parts) parts.push_back(part.vertices);
    ContractionResult contraction = contract(g, parts);

    ChromaticResult minor = exact_chromatic(contraction.minor, l, budget);
    report.minor_chromatic = minor.chromatic_number;
    report.minor_coloring = minor.witness;
    if (minor.chromatic_number > script.k) {
        report.outcome = ReductionOutcome::minor_uncolorable;
        return report;
    }
    report.minor_coloring.k = script.k;

    LiftResult lifted = lift(g, l, script, contraction, report.minor_coloring);
    report.lift_conflicts = lifted.conflicts;
    if (!lifted.conflicts.empty()) {
        report.outcome = ReductionOutcome::lift_conflict;
        return report;
    }

    ListAssignment lists = residual_lists(g, l, lifted.partial, script.uncolored, script.k);
    for (const auto& list : lists.lists) report.list_sizes.push_back(static_cast<int>(list.size()));

    // Greedy extension in script order against everything colored so far.
    FacialAdjacency adj = facial_adjacency_graph(g, l);
    Coloring full = lifted.partial;
    full.k = script.k;
    for (VertexId u : script.uncolored) {
        std::vector<char> banned(script.k + 1, 0);
        for (VertexId w : adj.neighbors[u]) {
            int c = full.color[w];
            if (c >= 1 && c <= script.k) banned[c] = 1;
        }
        int chosen = 0;
        for (int c = 1; c <= script.k; ++c)
            if (!banned[c]) {
                chosen = c;
                break;
            }
        if (chosen == 0) {
            report.stuck = u;
            report.outcome = ReductionOutcome::extension_stuck;
            report.final_coloring = full;
            return report;
        }
        full.color[u] = chosen;
    }
    report.final_coloring = full;
    report.violations = verify(g, l, full);
    report.outcome =
        report.violations.empty() ? ReductionOutcome::success : ReductionOutcome::improper;
    return report;
}

}  // namespace chroma
