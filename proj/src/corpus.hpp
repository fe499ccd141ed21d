#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace p5g {

// SplitMix64, fixed by algorithm so corpus outputs are reproducible across
// implementations and platforms. Bounded draws use plain modulo reduction;
// the tiny bias is irrelevant for fixture generation and keeps the stream
// specification one line long.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// C_n with the natural cyclic embedding (two faces).
RotationGraph gen_cycle(std::uint32_t n);

// Center with `center_degree` legs, each a path of `leg_length` edges.
RotationGraph gen_spider(std::uint32_t center_degree, std::uint32_t leg_length);

// The dodecahedral graph with its standard embedding: 20 vertices, 30 edges,
// 12 pentagonal faces. Canonical girth-5 cubic fixture.
RotationGraph gen_dodecahedron();

// Random planar triangulation by incremental face splits, then every edge
// subdivided once. Subdivision doubles every cycle, so the girth is at least
// 6, and it preserves the embedding.
RotationGraph gen_subdivided_triangulation(std::uint32_t n, std::uint64_t seed);

// The full girth-5 pipeline: subdivided random triangulation on n vertices,
// then pendant 2-paths grafted onto the maximum-degree vertex until its
// degree reaches delta_target. Output guarantees: valid genus-0 embedding,
// girth >= 5, max degree >= delta_target. Same (n, delta_target, seed) gives
// a byte-identical graph.
RotationGraph gen_girth5_random(std::uint32_t n, std::uint32_t delta_target, std::uint64_t seed);

// One corpus spec: `family key=value ...` with families cycle (n), spider
// (delta, legs), dodecahedron, subdivided-triangulation (n, seed), grafted
// (n, delta, seed).
struct GenSpec {
    std::string family;
    std::optional<std::uint32_t> n;
    std::optional<std::uint32_t> delta;
    std::optional<std::uint32_t> legs;
    std::optional<std::uint64_t> seed;

    // Parses one manifest line. line_no is used for error messages only.
    static GenSpec parse(const std::string& line, std::size_t line_no = 1);

    // Fills defaults (legs=1, seed=default_seed) where the family needs them.
    GenSpec resolved(std::uint64_t default_seed) const;

    // Canonical one-line form of a resolved spec; key order is fixed.
    std::string canonical() const;
};

RotationGraph generate(const GenSpec& spec, std::uint64_t default_seed = 0);

std::uint64_t fnv1a64(std::string_view data);

// Stable per-spec output directory name: fnv1a64 of the resolved canonical
// spec, in 16 hex digits.
std::string spec_hash(const GenSpec& spec, std::uint64_t default_seed = 0);

// "p5g v1" text format: header `p5g <n> <m>`, then one `rot <v>: <u1> ... <uk>`
// line per vertex giving the clockwise rotation. 0-based ids, whitespace
// separated, `#` starts a comment. write o read is the identity on canonical
// form; read o write is the identity.
RotationGraph read_p5g(const std::string& text);
std::string write_p5g(const RotationGraph& g);

// Manifest: one spec per line, comments and blank lines ignored.
std::vector<GenSpec> read_manifest(const std::string& text);

} // namespace p5g
