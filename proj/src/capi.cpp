#include "p5g.h"

#include <cstdlib>
#include <cstring>

#include "charge.hpp"
#include "coloring.hpp"
#include "corpus.hpp"
#include "faces.hpp"
#include "graph.hpp"
#include "serialize.hpp"
#include "structure.hpp"

struct p5g_graph {
    p5g::RotationGraph graph;
};

namespace {

thread_local std::string tl_last_error;

p5g_status status_of(p5g::ErrorCode code) {
    using EC = p5g::ErrorCode;
    switch (code) {
    case EC::AsymmetricAdjacency: return P5G_ERR_ASYMMETRIC_ADJACENCY;
    case EC::Loop: return P5G_ERR_LOOP;
    case EC::ParallelEdge: return P5G_ERR_PARALLEL_EDGE;
    case EC::DanglingVertexId: return P5G_ERR_DANGLING_VERTEX_ID;
    case EC::ParseError: return P5G_ERR_PARSE;
    case EC::Disconnected: return P5G_ERR_DISCONNECTED;
    case EC::NotPlanarEmbedding: return P5G_ERR_NOT_PLANAR_EMBEDDING;
    case EC::DeltaTooSmall: return P5G_ERR_DELTA_TOO_SMALL;
    case EC::DegreeTooSmall: return P5G_ERR_DEGREE_TOO_SMALL;
    case EC::BadParameter: return P5G_ERR_BAD_PARAMETER;
    case EC::BudgetExceeded: return P5G_ERR_BUDGET_EXCEEDED;
    case EC::PreconditionViolated: return P5G_ERR_PRECONDITION;
    case EC::ExtensionFailed: return P5G_ERR_EXTENSION_FAILED;
    case EC::ProfileMismatch:
    case EC::UnknownLedgerId:
    case EC::ConservationBroken:
    case EC::CapViolation:
    case EC::Internal: return P5G_ERR_INTERNAL;
    }
    return P5G_ERR_INTERNAL;
}

template <typename Fn>
p5g_status guarded(Fn&& fn) {
    try {
        fn();
        return P5G_OK;
    } catch (const p5g::Error& e) {
        tl_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        tl_last_error = e.what();
        return P5G_ERR_INTERNAL;
    }
}

p5g_status fail_argument(const char* message) {
    tl_last_error = message;
    return P5G_ERR_BAD_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** slot, const std::string& value) {
    if (slot)
        *slot = dup_string(value);
}

std::uint32_t resolve_delta(const p5g::RotationGraph& g, std::uint32_t delta) {
    return delta == 0 ? g.max_degree() : delta;
}

p5g_status make_graph(p5g_graph** out, p5g::RotationGraph (*build)(), const char* what) {
    (void)what;
    if (!out)
        return fail_argument("output handle is NULL");
    *out = nullptr;
    return guarded([&] { *out = new p5g_graph{build()}; });
}

} // namespace

extern "C" {

const char* p5g_version(void) { return "1.0.0"; }

const char* p5g_status_name(p5g_status status) {
    switch (status) {
    case P5G_OK: return "ok";
    case P5G_ERR_BAD_ARGUMENT: return "bad_argument";
    case P5G_ERR_PARSE: return "parse_error";
    case P5G_ERR_ASYMMETRIC_ADJACENCY: return "asymmetric_adjacency";
    case P5G_ERR_LOOP: return "loop";
    case P5G_ERR_PARALLEL_EDGE: return "parallel_edge";
    case P5G_ERR_DANGLING_VERTEX_ID: return "dangling_vertex_id";
    case P5G_ERR_DISCONNECTED: return "disconnected";
    case P5G_ERR_NOT_PLANAR_EMBEDDING: return "not_planar_embedding";
    case P5G_ERR_DELTA_TOO_SMALL: return "delta_too_small";
    case P5G_ERR_DEGREE_TOO_SMALL: return "degree_too_small";
    case P5G_ERR_BAD_PARAMETER: return "bad_parameter";
    case P5G_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case P5G_ERR_PRECONDITION: return "precondition_violated";
    case P5G_ERR_EXTENSION_FAILED: return "extension_failed";
    case P5G_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* p5g_last_error(void) { return tl_last_error.c_str(); }

void p5g_string_free(char* s) { std::free(s); }

void p5g_graph_free(p5g_graph* g) { delete g; }

p5g_status p5g_graph_from_text(const char* text, p5g_graph** out) {
    if (!text || !out)
        return fail_argument("text and output handle must be non-NULL");
    *out = nullptr;
    return guarded([&] { *out = new p5g_graph{p5g::read_p5g(text)}; });
}

p5g_status p5g_graph_to_text(const p5g_graph* g, char** out) {
    if (!g || !out)
        return fail_argument("graph and output must be non-NULL");
    return guarded([&] { set_out(out, p5g::write_p5g(g->graph)); });
}

p5g_status p5g_graph_from_spec(const char* spec_line, uint64_t default_seed, p5g_graph** out) {
    if (!spec_line || !out)
        return fail_argument("spec and output handle must be non-NULL");
    *out = nullptr;
    return guarded([&] {
        const auto spec = p5g::GenSpec::parse(spec_line);
        *out = new p5g_graph{p5g::generate(spec, default_seed)};
    });
}

p5g_status p5g_spec_canonical(const char* spec_line, uint64_t default_seed, char** out) {
    if (!spec_line || !out)
        return fail_argument("spec and output must be non-NULL");
    return guarded([&] {
        set_out(out, p5g::GenSpec::parse(spec_line).resolved(default_seed).canonical());
    });
}

p5g_status p5g_spec_hash(const char* spec_line, uint64_t default_seed, char** hex_out) {
    if (!spec_line || !hex_out)
        return fail_argument("spec and output must be non-NULL");
    return guarded([&] {
        set_out(hex_out, p5g::spec_hash(p5g::GenSpec::parse(spec_line), default_seed));
    });
}

p5g_status p5g_gen_cycle(uint32_t n, p5g_graph** out) {
    if (!out)
        return fail_argument("output handle is NULL");
    *out = nullptr;
    return guarded([&] { *out = new p5g_graph{p5g::gen_cycle(n)}; });
}

p5g_status p5g_gen_spider(uint32_t center_degree, uint32_t leg_length, p5g_graph** out) {
    if (!out)
        return fail_argument("output handle is NULL");
    *out = nullptr;
    return guarded([&] { *out = new p5g_graph{p5g::gen_spider(center_degree, leg_length)}; });
}

p5g_status p5g_gen_dodecahedron(p5g_graph** out) {
    return make_graph(out, &p5g::gen_dodecahedron, "dodecahedron");
}

p5g_status p5g_gen_girth5_random(uint32_t n, uint32_t delta_target, uint64_t seed,
                                 p5g_graph** out) {
    if (!out)
        return fail_argument("output handle is NULL");
    *out = nullptr;
    return guarded([&] { *out = new p5g_graph{p5g::gen_girth5_random(n, delta_target, seed)}; });
}

p5g_status p5g_graph_order(const p5g_graph* g, uint32_t* n_out) {
    if (!g)
        return fail_argument("graph is NULL");
    if (n_out)
        *n_out = g->graph.vertex_count();
    return P5G_OK;
}

p5g_status p5g_graph_size(const p5g_graph* g, uint64_t* m_out) {
    if (!g)
        return fail_argument("graph is NULL");
    if (m_out)
        *m_out = g->graph.edge_count();
    return P5G_OK;
}

p5g_status p5g_graph_max_degree(const p5g_graph* g, uint32_t* delta_out) {
    if (!g)
        return fail_argument("graph is NULL");
    if (delta_out)
        *delta_out = g->graph.max_degree();
    return P5G_OK;
}

p5g_status p5g_graph_girth(const p5g_graph* g, int* unbounded_out, uint32_t* girth_out) {
    if (!g)
        return fail_argument("graph is NULL");
    return guarded([&] {
        const auto gr = p5g::girth(g->graph);
        if (unbounded_out)
            *unbounded_out = gr.unbounded ? 1 : 0;
        if (girth_out)
            *girth_out = gr.unbounded ? 0 : gr.value;
    });
}

p5g_status p5g_graph_face_count(const p5g_graph* g, uint32_t* faces_out) {
    if (!g)
        return fail_argument("graph is NULL");
    return guarded([&] {
        const auto faces = p5g::trace_faces(g->graph);
        if (faces_out)
            *faces_out = faces.face_count();
    });
}

p5g_status p5g_graph_is_connected(const p5g_graph* g, int* connected_out) {
    if (!g)
        return fail_argument("graph is NULL");
    if (connected_out)
        *connected_out = g->graph.connected() ? 1 : 0;
    return P5G_OK;
}

p5g_status p5g_graph_genus_zero(const p5g_graph* g, int* ok_out) {
    if (!g)
        return fail_argument("graph is NULL");
    return guarded([&] {
        const auto faces = p5g::trace_faces(g->graph);
        const bool ok = p5g::validate_planar_embedding(g->graph, faces);
        if (ok_out)
            *ok_out = ok ? 1 : 0;
    });
}

p5g_status p5g_analyze_json(const p5g_graph* g, uint32_t delta, char** profile_json_out,
                            char** violations_json_out) {
    if (!g)
        return fail_argument("graph is NULL");
    return guarded([&] {
        const auto d = resolve_delta(g->graph, delta);
        const auto prof = p5g::profile(g->graph, d);
        auto report = p5g::check_reducible(g->graph, d);
        const auto faces = p5g::trace_faces(g->graph);
        const auto poor = p5g::poor_vertices(g->graph, faces);
        report.info = p5g::poor_cap_refinement_notes(g->graph, faces, poor);
        set_out(profile_json_out, p5g::dump_json(p5g::profile_json(prof)));
        set_out(violations_json_out, p5g::dump_json(p5g::violations_json(report)));
    });
}

p5g_status p5g_color(const p5g_graph* g, int exact, int64_t budget_ms, char** coloring_text_out,
                     uint32_t* colors_out, int* is_exact_out, uint32_t* lower_out,
                     uint32_t* upper_out) {
    if (!g)
        return fail_argument("graph is NULL");
    try {
        p5g::Coloring result;
        bool exact_result = false;
        if (exact) {
            const auto budget = std::chrono::milliseconds(budget_ms >= 0 ? budget_ms : 5000);
            auto found = p5g::exact_chi2(g->graph, budget);
            result = std::move(found.witness);
            result.palette = found.chi2;
            exact_result = true;
        } else {
            result = p5g::dsatur(g->graph);
        }
        if (colors_out)
            *colors_out = result.palette;
        if (is_exact_out)
            *is_exact_out = exact_result ? 1 : 0;
        if (lower_out)
            *lower_out = exact_result ? result.palette : 0;
        if (upper_out)
            *upper_out = result.palette;
        set_out(coloring_text_out, p5g::write_coloring(result));
        return P5G_OK;
    } catch (const p5g::BudgetExceeded& e) {
        tl_last_error = e.what();
        if (lower_out)
            *lower_out = e.lower();
        if (upper_out)
            *upper_out = e.upper();
        if (coloring_text_out)
            *coloring_text_out = nullptr;
        return P5G_ERR_BUDGET_EXCEEDED;
    } catch (const p5g::Error& e) {
        tl_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        tl_last_error = e.what();
        return P5G_ERR_INTERNAL;
    }
}

p5g_status p5g_validate_coloring(const p5g_graph* g, const char* coloring_text, int* valid_out,
                                 uint32_t* conflict_u_out, uint32_t* conflict_v_out) {
    if (!g || !coloring_text)
        return fail_argument("graph and coloring text must be non-NULL");
    return guarded([&] {
        const auto coloring = p5g::read_coloring(coloring_text, g->graph.vertex_count());
        const auto conflict = p5g::find_conflict(g->graph, coloring);
        if (valid_out)
            *valid_out = conflict ? 0 : 1;
        if (conflict) {
            if (conflict_u_out)
                *conflict_u_out = conflict->u;
            if (conflict_v_out)
                *conflict_v_out = conflict->v;
        }
    });
}

p5g_status p5g_extend_light(const p5g_graph* g, const char* coloring_text, uint32_t v,
                            uint32_t delta, char** extended_text_out) {
    if (!g || !coloring_text)
        return fail_argument("graph and coloring text must be non-NULL");
    return guarded([&] {
        const auto partial = p5g::read_coloring(coloring_text, g->graph.vertex_count());
        const auto extended = p5g::extend_light(g->graph, partial, v, delta);
        set_out(extended_text_out, p5g::write_coloring(extended));
    });
}

p5g_status p5g_discharge_json(const p5g_graph* g, uint32_t delta, char** ledger_json_out,
                              char** audit_json_out, int* all_pass_out) {
    if (!g)
        return fail_argument("graph is NULL");
    return guarded([&] {
        const auto d = resolve_delta(g->graph, delta);
        const auto faces = p5g::trace_faces(g->graph);
        const auto initial = p5g::initial_charges(g->graph, faces);
        const auto prof = p5g::profile(g->graph, d);
        const auto ledger = p5g::apply_rules(g->graph, faces, prof);
        const auto settled = p5g::settle(initial, ledger);
        const auto report = p5g::check_reducible(g->graph, d);
        const auto result = p5g::audit(g->graph, faces, prof, initial, settled, report);
        set_out(ledger_json_out, p5g::dump_json(p5g::ledger_json(ledger)));
        set_out(audit_json_out, p5g::dump_json(p5g::audit_json(result)));
        if (all_pass_out)
            *all_pass_out = result.all_pass ? 1 : 0;
    });
}

} // extern "C"
