#pragma once

#include <json.hpp>
#include <string>

#include "charge.hpp"
#include "coloring.hpp"
#include "structure.hpp"

namespace p5g {

// All documents use insertion-ordered JSON so serialization is byte-stable
// for identical inputs.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);

Json profile_json(const StructuralProfile& p);

// A bare array of {rule, witnesses, message} rows: the findings in canonical
// order, then a MinDegree row when degree <= 1 vertices exist, then any
// informational rows.
Json violations_json(const ViolationReport& report);

// {"format", "r9_source", "notes", "entries"}; entries are the canonical
// array of {rule, source, sink, amount}.
Json ledger_json(const TransferLedger& ledger);

// {"cases", "faces", "total_initial", "total_final"}.
Json audit_json(const AuditReport& report);

// Coloring text: header `k <palette>`, then `<vertex> <color>` per assigned
// vertex in ascending order.
std::string write_coloring(const Coloring& c);
Coloring read_coloring(const std::string& text, std::uint32_t vertex_count);

std::string dump_json(const Json& doc);

} // namespace p5g
