#include "charge.hpp"

#include <algorithm>

namespace p5g {

namespace {

std::vector<VertexId> sorted_neighbors(const RotationGraph& g, VertexId v) {
    std::vector<VertexId> out(g.rotation(v).begin(), g.rotation(v).end());
    std::sort(out.begin(), out.end());
    return out;
}

NodeRef vertex_ref(VertexId v) { return {NodeKind::Vertex, v}; }
NodeRef face_ref(std::uint32_t f) { return {NodeKind::Face, f}; }

} // namespace

Rational ChargeMap::total() const {
    Rational t = 0;
    for (const auto& r : vertex_charge)
        t += r;
    for (const auto& r : face_charge)
        t += r;
    return t;
}

ChargeMap initial_charges(const RotationGraph& g, const FaceSet& faces) {
    if (!g.connected())
        throw Error(ErrorCode::Disconnected, "initial charges require a connected graph");
    if (!validate_planar_embedding(g, faces))
        throw Error(ErrorCode::NotPlanarEmbedding,
                    "embedding is not genus 0: V - E + F != 2");

    ChargeMap cm;
    cm.vertex_charge.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        cm.vertex_charge.emplace_back(Rational(3 * std::int64_t(g.degree(v)), 2) - 5);
    cm.face_charge.reserve(faces.face_count());
    for (std::uint32_t f = 0; f < faces.face_count(); ++f)
        cm.face_charge.emplace_back(Rational(std::int64_t(faces.length(f))) - 5);

    if (cm.total() != -10)
        throw Error(ErrorCode::Internal, "initial charge total is not -10 on a genus-0 embedding");
    return cm;
}

R7Share r7_share(std::uint32_t degree) {
    if (degree < 10)
        throw Error(ErrorCode::DegreeTooSmall, "R7 applies to 10+-vertices, got degree " +
                                                   std::to_string(degree));
    const std::int64_t d = degree;
    R7Share s;
    s.share = Rational(3 * d - 10, 2 * d);
    s.redirect = degree >= 11 ? Rational(s.share - 1) : Rational(0);
    return s;
}

int audit_case(std::uint32_t degree) {
    if (degree >= 10)
        return 9;
    if (degree >= 2)
        return static_cast<int>(degree) - 1;
    return 0;
}

TransferLedger apply_rules(const RotationGraph& g, const FaceSet& faces,
                           const StructuralProfile& p) {
    const auto n = g.vertex_count();
    if (p.vertices.size() != n)
        throw Error(ErrorCode::ProfileMismatch, "profile vertex count does not match the graph");
    for (VertexId v = 0; v < n; ++v)
        if (p.vertices[v].degree != g.degree(v))
            throw Error(ErrorCode::ProfileMismatch,
                        "profile degree mismatch at vertex " + std::to_string(v));

    TransferLedger ledger;
    auto deg = [&](VertexId v) { return p.vertices[v].degree; };
    auto emit = [&](std::uint32_t rule, NodeRef src, NodeRef dst, Rational amount) {
        ledger.entries.push_back({rule, src, dst, std::move(amount)});
    };

    bool note_r1 = false, note_r7 = false;

    // R1: every 2-vertex receives 1 from each neighbour of degree 3..9.
    // (The literal "9--neighbour" would include 2--neighbours; restricting
    // donors to 3..9 avoids meaningless swaps between adjacent 2-vertices,
    // which cannot occur in a minimal counterexample anyway.)
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 2)
            continue;
        for (VertexId u : sorted_neighbors(g, v)) {
            if (deg(u) >= 3 && deg(u) <= 9)
                emit(1, vertex_ref(u), vertex_ref(v), 1);
            else if (deg(u) <= 2)
                note_r1 = true;
        }
    }

    // R2: every light 3(0)-vertex receives 1/4 from each neighbour of degree 3..8.
    for (VertexId v = 0; v < n; ++v) {
        if (!p.vertices[v].light || !p.vertices[v].is_kd(3, 0))
            continue;
        for (VertexId u : sorted_neighbors(g, v))
            if (deg(u) >= 3 && deg(u) <= 8)
                emit(2, vertex_ref(u), vertex_ref(v), Rational(1, 4));
    }

    // R3: every 3(1)-vertex receives 1/4 per 3..5-neighbour, 1/2 per 6..8-neighbour.
    for (VertexId v = 0; v < n; ++v) {
        if (!p.vertices[v].is_kd(3, 1))
            continue;
        for (VertexId u : sorted_neighbors(g, v)) {
            if (deg(u) >= 3 && deg(u) <= 5)
                emit(3, vertex_ref(u), vertex_ref(v), Rational(1, 4));
            else if (deg(u) >= 6 && deg(u) <= 8)
                emit(3, vertex_ref(u), vertex_ref(v), Rational(1, 2));
        }
    }

    // R4/R5: transfers to weak-adjacent 5(4)-vertices, one entry per
    // weak-adjacency instance (donor, recipient, middle 2-vertex). On girth>=5
    // inputs a pair has at most one middle, since two would close a 4-cycle.
    // The 10+-neighbour hypotheses of R4 and R5 are complementary, so no
    // vertex donates under both.
    for (VertexId v = 0; v < n; ++v) {
        std::uint32_t ten_plus = 0, three_plus = 0, nine_plus = 0;
        for (VertexId u : g.rotation(v)) {
            ten_plus += deg(u) >= 10;
            three_plus += deg(u) >= 3;
            nine_plus += deg(u) >= 9;
        }
        for (const auto& wn : weak_neighbors(g, v)) {
            if (!p.vertices[wn.neighbor].is_kd(5, 4))
                continue;
            if (ten_plus >= 2) {
                if (deg(v) >= 3 && deg(v) <= 9)
                    emit(4, vertex_ref(v), vertex_ref(wn.neighbor), Rational(1, 4));
                continue;
            }
            const bool a = deg(v) >= 8 && deg(v) <= 9;
            const bool b = deg(v) >= 5 && deg(v) <= 7 && three_plus >= 2;
            const bool c = deg(v) == 4 && p.vertices[v].n2 == 1;
            const bool d = deg(v) == 4 && p.vertices[v].n2 == 2 && nine_plus >= 2;
            if (a || b || c || d)
                emit(5, vertex_ref(v), vertex_ref(wn.neighbor), Rational(1, 8));
        }
    }

    // R6: every 9-vertex gives 1/2 to each neighbour of degree 3..8.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 9)
            continue;
        for (VertexId u : sorted_neighbors(g, v))
            if (deg(u) >= 3 && deg(u) <= 8)
                emit(6, vertex_ref(v), vertex_ref(u), Rational(1, 2));
    }

    // R7: every 10+-vertex pays its whole charge out in equal shares. An
    // 11+-vertex sends a 2-neighbour exactly 1 and redirects share-1 past it
    // to the 2-neighbour's other endpoint; if that endpoint has degree <= 1
    // (it receives nothing under any rule) the full share goes to the
    // 2-neighbour instead, keeping the payout exact.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) < 10)
            continue;
        const R7Share s = r7_share(deg(v));
        for (VertexId u : sorted_neighbors(g, v)) {
            if (deg(v) >= 11 && deg(u) == 2) {
                const auto& ru = g.rotation(u);
                const VertexId w = ru[0] == v ? ru[1] : ru[0];
                if (deg(w) >= 2) {
                    emit(7, vertex_ref(v), vertex_ref(u), 1);
                    emit(7, vertex_ref(v), vertex_ref(w), s.redirect);
                } else {
                    emit(7, vertex_ref(v), vertex_ref(u), s.share);
                    note_r7 = true;
                }
            } else {
                emit(7, vertex_ref(v), vertex_ref(u), s.share);
            }
        }
    }

    // R8: adjacent 10+-vertices each give 1/2 to every face side along their
    // edge; a bridge's single face collects both sides.
    std::vector<Rational> face_balance(faces.face_count());
    for (std::uint32_t f = 0; f < faces.face_count(); ++f)
        face_balance[f] = Rational(std::int64_t(faces.length(f))) - 5;
    for (VertexId u = 0; u < n; ++u) {
        if (deg(u) < 10)
            continue;
        for (VertexId v : sorted_neighbors(g, u)) {
            if (v < u || deg(v) < 10)
                continue;
            const std::uint32_t f1 = faces.face_of(u, v);
            const std::uint32_t f2 = faces.face_of(v, u);
            for (std::uint32_t f : {f1, f2}) {
                emit(8, vertex_ref(u), face_ref(f), Rational(1, 2));
                emit(8, vertex_ref(v), face_ref(f), Rational(1, 2));
                face_balance[f] += 1;
            }
        }
    }

    // R9: each face sheds its positive post-R8 balance equally to its f-poor
    // vertices. A positive face with no poor vertices keeps its charge.
    const auto poor = poor_vertices(g, faces);
    for (std::uint32_t f = 0; f < faces.face_count(); ++f) {
        if (face_balance[f] <= 0 || poor[f].empty())
            continue;
        const Rational each = face_balance[f] / std::int64_t(poor[f].size());
        for (VertexId y : poor[f])
            emit(9, face_ref(f), vertex_ref(y), each);
    }

    if (note_r1)
        ledger.notes.push_back(
            "R1: a 2-vertex has a neighbour of degree <= 2; such neighbours are not R1 donors "
            "(donor degree is restricted to 3..9)");
    if (note_r7)
        ledger.notes.push_back(
            "R7: a 2-neighbour of an 11+-vertex has an endpoint of degree <= 1; the full share "
            "went to the 2-neighbour instead of being split");

    std::stable_sort(ledger.entries.begin(), ledger.entries.end(),
                     [](const Transfer& x, const Transfer& y) {
                         if (x.rule != y.rule)
                             return x.rule < y.rule;
                         if (x.source != y.source)
                             return x.source < y.source;
                         return x.sink < y.sink;
                     });
    return ledger;
}

ChargeMap settle(const ChargeMap& initial, const TransferLedger& ledger) {
    ChargeMap out = initial;
    auto resolve = [&](const NodeRef& ref) -> Rational& {
        if (ref.kind == NodeKind::Vertex) {
            if (ref.id >= out.vertex_charge.size())
                throw Error(ErrorCode::UnknownLedgerId,
                            "ledger names vertex " + std::to_string(ref.id));
            return out.vertex_charge[ref.id];
        }
        if (ref.id >= out.face_charge.size())
            throw Error(ErrorCode::UnknownLedgerId, "ledger names face " + std::to_string(ref.id));
        return out.face_charge[ref.id];
    };

    for (const auto& t : ledger.entries) {
        if (t.amount <= 0)
            throw Error(ErrorCode::Internal, "ledger amount is not strictly positive");
        resolve(t.source) -= t.amount;
        resolve(t.sink) += t.amount;
    }

    if (out.total() != initial.total())
        throw Error(ErrorCode::ConservationBroken, "settling changed the total charge");
    return out;
}

AuditReport audit(const RotationGraph& g, const FaceSet& faces, const StructuralProfile& p,
                  const ChargeMap& initial, const ChargeMap& final_charges,
                  const ViolationReport& report) {
    const auto n = g.vertex_count();
    if (final_charges.vertex_charge.size() != n ||
        final_charges.face_charge.size() != faces.face_count() ||
        initial.vertex_charge.size() != n || initial.face_charge.size() != faces.face_count())
        throw Error(ErrorCode::ProfileMismatch, "charge maps do not match the graph");

    AuditReport out;
    out.total_initial = initial.total();
    out.total_final = final_charges.total();
    out.all_pass = true;

    for (VertexId v = 0; v < n; ++v) {
        VertexAudit va;
        va.vertex = v;
        va.degree = p.vertices[v].degree;
        va.case_id = audit_case(va.degree);
        va.in_analysis = va.degree >= 2;
        va.initial = initial.vertex_charge[v];
        va.final_charge = final_charges.vertex_charge[v];
        va.pass = va.final_charge >= 0;
        if (!va.pass) {
            out.all_pass = false;
            const auto dist = bfs_distances(g, v, 2);
            for (const auto& f : report.findings) {
                bool near = std::any_of(f.witnesses.begin(), f.witnesses.end(),
                                        [&](VertexId w) { return dist[w] <= 2; });
                if (near)
                    va.linked.push_back(f);
            }
            for (VertexId w : report.sub_min_degree)
                if (dist[w] <= 2)
                    va.linked_min_degree.push_back(w);
        }
        out.cases.push_back(std::move(va));
    }

    for (std::uint32_t f = 0; f < faces.face_count(); ++f) {
        FaceAudit fa;
        fa.face = f;
        fa.length = faces.length(f);
        fa.initial = initial.face_charge[f];
        fa.final_charge = final_charges.face_charge[f];
        fa.pass = fa.final_charge >= 0;
        out.all_pass &= fa.pass;
        out.faces.push_back(std::move(fa));
    }
    return out;
}

} // namespace p5g
