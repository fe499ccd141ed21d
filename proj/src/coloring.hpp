#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"

namespace p5g {

constexpr std::int32_t kUncolored = -1;

// Partial 2-distance coloring: color[v] in [0, palette) or kUncolored.
// Valid means no two colored vertices at distance <= 2 share a color.
struct Coloring {
    std::uint32_t palette = 0;
    std::vector<std::int32_t> color;

    bool total() const;
    std::uint32_t colors_used() const; // max assigned color + 1
};

struct Conflict {
    VertexId u = 0;
    VertexId v = 0;
};

// First conflict in lexicographic (u,v) order, or nullopt when the coloring
// satisfies the distance-2 constraint on all colored pairs. A coloring with
// no assignments is vacuously valid.
std::optional<Conflict> find_conflict(const RotationGraph& g, const Coloring& c);

inline bool validate_coloring(const RotationGraph& g, const Coloring& c) {
    return !find_conflict(g, c).has_value();
}

// Colors vertices in the given order, each receiving the least color absent
// from its distance-2 neighbourhood. order must be a permutation of V.
Coloring greedy_square(const RotationGraph& g, std::span<const VertexId> order);

// Saturation-degree heuristic on the square graph. Ties broken by larger
// square-degree, then smaller vertex id; colors chosen least-first. Fully
// deterministic.
Coloring dsatur(const RotationGraph& g);

struct ExactResult {
    std::uint32_t chi2 = 0;
    Coloring witness;
};

// Exact 2-distance chromatic number by branch and bound on the square graph.
// Lower bound: a greedily grown clique seeded with the closed neighbourhood
// of a maximum-degree vertex (hence always >= Delta(g) + 1). Upper bound:
// dsatur. Searches k-colorability upward from the lower bound, so the first
// success yields a witness. Practical up to roughly 60 vertices on adversarial
// inputs; throws BudgetExceeded with the bounds found when time runs out.
ExactResult exact_chi2(const RotationGraph& g, std::chrono::milliseconds budget);

// The decolor-and-extend procedure for a single uncolored non-heavy vertex v,
// on a palette of exactly delta + 4 colors:
//
//   S := light neighbours of v, R := 2-neighbours of v that have a 3-neighbour
//   (R is a subset of S); decolor S; give v the least available color; recolor
//   S \ R in ascending id order, then R in ascending id order, least-first.
//
// Colors outside S and v are never altered. Throws PreconditionViolated when
// the input is not a valid partial coloring with exactly v uncolored on a
// (delta+4)-palette, or when v is heavy; throws ExtensionFailed if some vertex
// ends up with no available color (possible only when the input graph violates
// the structure the procedure's guarantee rests on).
Coloring extend_light(const RotationGraph& g, const Coloring& partial, VertexId v,
                      std::uint32_t delta);

} // namespace p5g
