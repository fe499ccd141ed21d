#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faces.hpp"
#include "graph.hpp"

namespace p5g {

// Per-vertex structural record relative to a fixed delta parameter.
//
//   degree_sum   D(v) = sum of neighbour degrees
//   n2, n3       neighbour counts by degree (exactly 2, exactly 3)
//   n2_with_3    n_2^3(v): 2-neighbours of v that have a 3-neighbour
//   light        D(v) < delta + 4 + n_2^3(v)         (degree >= 2 only)
//   n_light      n^l(v): light neighbours of v
//   heavy        D(v) >= delta + 4 + n^l(v)          (degree >= 2 only)
//
// A k(d)-vertex is a degree-k vertex with exactly d 2-neighbours, i.e.
// k = degree and d = n2. Vertices of degree <= 1 are never light and never
// heavy; they sit outside the classification entirely.
struct VertexProfile {
    std::uint32_t degree = 0;
    std::uint64_t degree_sum = 0;
    std::uint32_t n2 = 0;
    std::uint32_t n3 = 0;
    std::uint32_t n2_with_3 = 0;
    bool light = false;
    std::uint32_t n_light = 0;
    bool heavy = false;

    bool is_kd(std::uint32_t k, std::uint32_t d) const { return degree == k && n2 == d; }
};

struct StructuralProfile {
    std::uint32_t delta = 0;
    std::uint32_t max_degree = 0;
    bool delta_above_max = false; // informational: delta parameter exceeds the graph's maximum degree
    std::vector<VertexProfile> vertices;
};

// Computes the profile. Order: degrees -> D -> n_2^3 -> light -> n^l -> heavy
// (lightness does not depend on n^l, so a single pass per stage suffices).
// Throws DeltaTooSmall if delta < max degree; delta above the maximum degree
// is allowed and only flagged.
StructuralProfile profile(const RotationGraph& g, std::uint32_t delta);

// Weak neighbours of v: all w such that a path v-m-w exists with d(m) = 2 and
// w != v; one entry per middle vertex, sorted by (neighbour, middle).
struct WeakNeighbor {
    VertexId neighbor = 0;
    VertexId middle = 0;

    friend auto operator<=>(const WeakNeighbor&, const WeakNeighbor&) = default;
};

std::vector<WeakNeighbor> weak_neighbors(const RotationGraph& g, VertexId v);

// f-poor vertices per face: y with d(y) in [5,6] flanked by two 2-vertices
// consecutively on the boundary walk. Each face's set is sorted ascending.
// Throws CapViolation if some face exceeds floor(l(f)/2) poor vertices; that
// bound holds combinatorially, so tripping it signals an implementation bug.
std::vector<std::vector<VertexId>> poor_vertices(const RotationGraph& g, const FaceSet& faces);

enum class RuleId {
    Cor2a, // adjacent 2-vertices
    Cor2b, // 3-vertex with two or more 2-neighbours
    Cor2c, // 4(4)-vertex
    Lem1a, // 3-vertex with a 2-neighbour that is not heavy
    Lem1b, // light 3(0)-vertex whose 3-neighbour has no 12+-neighbour
    Lem1c, // adjacent 3(1)-vertices
    Lem2a, // 4-vertex with a 2-neighbour that is not heavy
    Lem2b, // 4-vertex with two 2-neighbours and a 3(1)-neighbour, conclusion fails
    Lem2c, // 4-vertex with three 2-neighbours, one of them not heavy
    Lem3,  // k(k-1)-vertex (5<=k<=12) with light 2-neighbours but no big neighbour
    Prop2, // light vertex with a neighbour that is not heavy
};

const char* rule_id_name(RuleId rule);

struct Finding {
    RuleId rule;
    std::vector<VertexId> witnesses; // ascending
    std::string message;
};

// Each finding is a configuration that a recoloring argument rules out of
// any minimal counterexample. An empty report means the graph is structurally
// consistent with being one; it does not mean the graph is one. Degree <= 1 vertices are
// never matched; they are listed in sub_min_degree instead.
struct ViolationReport {
    std::vector<Finding> findings;           // sorted by (rule, witnesses)
    std::vector<VertexId> sub_min_degree;    // vertices of degree <= 1
    std::vector<std::string> info;           // informational notes (Cor. 3 refinement)

    bool empty() const { return findings.empty() && sub_min_degree.empty(); }
};

ViolationReport check_reducible(const RotationGraph& g, std::uint32_t delta);

// The refined poor-vertex cap, reported informationally: a face f with an
// f-poor vertex weak-adjacent to two 7+-vertices lying on f admits at most
// floor((l(f)-3)/2) f-poor vertices. Returns one note per face where the
// hypothesis holds.
std::vector<std::string> poor_cap_refinement_notes(const RotationGraph& g, const FaceSet& faces,
                                                   const std::vector<std::vector<VertexId>>& poor);

} // namespace p5g
