#include "serialize.hpp"

#include <charconv>
#include <sstream>

namespace p5g {

Json rational_json(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
        throw Error(ErrorCode::Internal, "rational exceeds the JSON int64 range");
    return Json{{"num", num.convert_to<std::int64_t>()}, {"den", den.convert_to<std::int64_t>()}};
}

Json profile_json(const StructuralProfile& p) {
    Json vertices = Json::array();
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        const auto& pv = p.vertices[v];
        vertices.push_back(Json{
            {"v", v},
            {"degree", pv.degree},
            {"D", pv.degree_sum},
            {"n2", pv.n2},
            {"n3", pv.n3},
            {"n2_3", pv.n2_with_3},
            {"light", pv.light},
            {"n_light", pv.n_light},
            {"heavy", pv.heavy},
            {"kd", Json{{"k", pv.degree}, {"d", pv.n2}}},
        });
    }
    return Json{
        {"delta", p.delta},
        {"max_degree", p.max_degree},
        {"delta_above_max", p.delta_above_max},
        {"vertices", std::move(vertices)},
    };
}

Json violations_json(const ViolationReport& report) {
    Json rows = Json::array();
    for (const auto& f : report.findings)
        rows.push_back(Json{
            {"rule", rule_id_name(f.rule)},
            {"witnesses", f.witnesses},
            {"message", f.message},
        });
    if (!report.sub_min_degree.empty())
        rows.push_back(Json{
            {"rule", "MinDegree"},
            {"witnesses", report.sub_min_degree},
            {"message", "vertices of degree <= 1 are outside the minimal-counterexample "
                        "structure and are never matched by detectors"},
        });
    for (const auto& note : report.info)
        rows.push_back(Json{
            {"rule", "Cor3Refinement"},
            {"witnesses", Json::array()},
            {"message", note},
        });
    return rows;
}

namespace {

Json node_json(const NodeRef& ref) {
    return Json{{"kind", ref.kind == NodeKind::Vertex ? "vertex" : "face"}, {"id", ref.id}};
}

} // namespace

Json ledger_json(const TransferLedger& ledger) {
    Json entries = Json::array();
    for (const auto& t : ledger.entries)
        entries.push_back(Json{
            {"rule", "R" + std::to_string(t.rule)},
            {"source", node_json(t.source)},
            {"sink", node_json(t.sink)},
            {"amount", rational_json(t.amount)},
        });
    return Json{
        {"format", "p5g.ledger/1"},
        {"r9_source", "post-r8-balance"},
        {"notes", ledger.notes},
        {"entries", std::move(entries)},
    };
}

Json audit_json(const AuditReport& report) {
    Json cases = Json::array();
    for (const auto& va : report.cases) {
        Json linked = Json::array();
        for (const auto& f : va.linked)
            linked.push_back(Json{
                {"rule", rule_id_name(f.rule)},
                {"witnesses", f.witnesses},
                {"message", f.message},
            });
        for (VertexId w : va.linked_min_degree)
            linked.push_back(Json{
                {"rule", "MinDegree"},
                {"witnesses", Json::array({w})},
                {"message", "vertex " + std::to_string(w) + " has degree <= 1"},
            });
        cases.push_back(Json{
            {"vertex", va.vertex},
            {"degree", va.degree},
            {"case", va.case_id},
            {"in_analysis", va.in_analysis},
            {"initial", rational_json(va.initial)},
            {"final", rational_json(va.final_charge)},
            {"pass", va.pass},
            {"violations", std::move(linked)},
        });
    }
    Json faces = Json::array();
    for (const auto& fa : report.faces)
        faces.push_back(Json{
            {"face", fa.face},
            {"length", fa.length},
            {"initial", rational_json(fa.initial)},
            {"final", rational_json(fa.final_charge)},
            {"pass", fa.pass},
        });
    return Json{
        {"cases", std::move(cases)},
        {"faces", std::move(faces)},
        {"total_initial", rational_json(report.total_initial)},
        {"total_final", rational_json(report.total_final)},
    };
}

std::string write_coloring(const Coloring& c) {
    std::string out = "k " + std::to_string(c.palette) + "\n";
    for (std::size_t v = 0; v < c.color.size(); ++v)
        if (c.color[v] != kUncolored)
            out += std::to_string(v) + " " + std::to_string(c.color[v]) + "\n";
    return out;
}

Coloring read_coloring(const std::string& text, std::uint32_t vertex_count) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    Coloring c{0, std::vector<std::int32_t>(vertex_count, kUncolored)};
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first))
            continue;
        if (!have_header) {
            std::uint64_t k = 0;
            if (first != "k" || !(tokens >> k))
                throw ParseError(line_no, "expected 'k <palette>' header");
            c.palette = static_cast<std::uint32_t>(k);
            have_header = true;
            continue;
        }
        std::uint64_t v = 0, col = 0;
        auto [p, ec] = std::from_chars(first.data(), first.data() + first.size(), v);
        if (ec != std::errc{} || p != first.data() + first.size() || !(tokens >> col))
            throw ParseError(line_no, "expected '<vertex> <color>'");
        if (v >= vertex_count)
            throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        if (col >= c.palette)
            throw ParseError(line_no, "color " + std::to_string(col) + " outside palette");
        if (c.color[v] != kUncolored)
            throw ParseError(line_no, "vertex " + std::to_string(v) + " colored twice");
        c.color[v] = static_cast<std::int32_t>(col);
    }
    if (!have_header)
        throw ParseError(line_no + 1, "missing 'k <palette>' header");
    return c;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace p5g
