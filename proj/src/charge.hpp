#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faces.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "structure.hpp"

namespace p5g {

// Exact charges: mu(v) = 3d(v)/2 - 5 per vertex, mu(f) = l(f) - 5 per face.
struct ChargeMap {
    std::vector<Rational> vertex_charge;
    std::vector<Rational> face_charge;

    Rational total() const;
};

// Initial charge assignment. Requires a connected genus-0 embedding; the
// total is then exactly -10 by Euler's formula (asserted).
// Throws Disconnected / NotPlanarEmbedding.
ChargeMap initial_charges(const RotationGraph& g, const FaceSet& faces);

// R7 payout of a 10+-vertex of degree d: each neighbour's share is
// (3d-10)/(2d), the vertex's whole initial charge split equally. For d >= 11
// a 2-neighbour receives exactly 1 and the remainder share-1 travels past it
// to its other endpoint; at d = 10 the share is exactly 1 and nothing is
// redirected.
struct R7Share {
    Rational share;
    Rational redirect;
};

R7Share r7_share(std::uint32_t degree); // throws DegreeTooSmall for degree < 10

enum class NodeKind : std::uint8_t { Vertex, Face };

struct NodeRef {
    NodeKind kind = NodeKind::Vertex;
    std::uint32_t id = 0;

    friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

struct Transfer {
    std::uint32_t rule = 0; // 1..9
    NodeRef source;
    NodeRef sink;
    Rational amount; // strictly positive
};

// The discharging ledger: one atomic transfer per rule instance, canonically
// sorted by (rule, source, sink). notes records the places where an
// implementation decision changed literal rule text behavior on this input.
struct TransferLedger {
    std::vector<Transfer> entries;
    std::vector<std::string> notes;
};

// Applies R1..R9 against the initial configuration. R1-R8 read only degrees
// and structure (transfers never cascade); R9 runs last against each face's
// post-R8 balance, split equally over its f-poor vertices when positive.
//
//   R1  each 2-vertex receives 1 from each neighbour of degree 3..9
//   R2  each light 3(0)-vertex receives 1/4 from each neighbour of degree 3..8
//   R3  each 3(1)-vertex receives 1/4 per neighbour of degree 3..5 and
//       1/2 per neighbour of degree 6..8
//   R4  v weak-adjacent to a 5(4)-vertex u, v with two 10+-neighbours and
//       3 <= d(v) <= 9: v gives 1/4 to u
//   R5  v weak-adjacent to a 5(4)-vertex u, v with at most one 10+-neighbour,
//       gives 1/8 to u when (a) 8 <= d(v) <= 9, (b) 5 <= d(v) <= 7 with two
//       3+-neighbours, (c) d(v) = 4 with n2 = 1, or (d) d(v) = 4 with n2 = 2
//       and two 9+-neighbours
//   R6  each 9-vertex gives 1/2 to each neighbour of degree 3..8
//   R7  each 10+-vertex pays out its whole charge in equal shares (see r7_share)
//   R8  adjacent 10+-vertices each give 1/2 to each face side along their edge
//   R9  each face sheds its positive post-R8 balance equally to its f-poor vertices
//
// Throws ProfileMismatch when the profile does not match the graph.
TransferLedger apply_rules(const RotationGraph& g, const FaceSet& faces,
                           const StructuralProfile& p);

// final = initial + inflows - outflows, conservation checked exactly.
// Throws UnknownLedgerId / ConservationBroken.
ChargeMap settle(const ChargeMap& initial, const TransferLedger& ledger);

// Audit case by degree: k=2 -> (1), k=3 -> (2), ..., k=9 -> (8), k>=10 -> (9).
// Degree <= 1 vertices fall outside the case analysis (case 0).
int audit_case(std::uint32_t degree);

struct VertexAudit {
    VertexId vertex = 0;
    std::uint32_t degree = 0;
    int case_id = 0;
    bool in_analysis = false;
    Rational initial;
    Rational final_charge;
    bool pass = false;
    std::vector<Finding> linked;               // findings within distance 2
    std::vector<VertexId> linked_min_degree;   // degree <= 1 vertices within distance 2
};

struct FaceAudit {
    std::uint32_t face = 0;
    std::uint32_t length = 0;
    Rational initial;
    Rational final_charge;
    bool pass = false;
};

struct AuditReport {
    std::vector<VertexAudit> cases;
    std::vector<FaceAudit> faces;
    Rational total_initial;
    Rational total_final;
    bool all_pass = false; // over in-analysis vertices and all faces
};

// Classifies every vertex and face and marks pass iff the final charge is
// nonnegative. The audit reports; it never asserts nonnegativity (arbitrary
// inputs legitimately fail). Failing vertices carry the report's findings
// whose witnesses lie within distance 2, explaining why the graph is not a
// minimal counterexample there.
AuditReport audit(const RotationGraph& g, const FaceSet& faces, const StructuralProfile& p,
                  const ChargeMap& initial, const ChargeMap& final_charges,
                  const ViolationReport& report);

} // namespace p5g
