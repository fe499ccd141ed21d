#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace p5g {

using VertexId = std::uint32_t;

// Embedded planar graph given as a rotation system: for every vertex the
// clockwise cyclic sequence of its neighbours. The rotation system is the
// single source of adjacency truth; faces are derived from it.
//
// Construction validates: symmetric adjacency (u lists v iff v lists u,
// each exactly once), no loops, no parallel edges, all ids in range.
class RotationGraph {
public:
    static RotationGraph from_rotations(std::vector<std::vector<VertexId>> rotations,
                                        std::vector<std::string> labels = {});

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(rotation_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }

    const std::vector<VertexId>& rotation(VertexId v) const { return rotation_[v]; }
    std::uint32_t degree(VertexId v) const { return static_cast<std::uint32_t>(rotation_[v].size()); }
    std::uint32_t max_degree() const { return max_degree_; }

    bool adjacent(VertexId u, VertexId v) const;

    // Successor of u in the cyclic rotation around v. u must be a neighbour of v.
    VertexId rotation_successor(VertexId v, VertexId u) const;

    bool connected() const;

    const std::vector<std::string>& labels() const { return labels_; }

private:
    RotationGraph() = default;

    std::vector<std::vector<VertexId>> rotation_;
    std::vector<std::unordered_map<VertexId, std::uint32_t>> position_; // neighbour -> index in rotation
    std::vector<std::string> labels_;
    std::uint64_t edge_count_ = 0;
    std::uint32_t max_degree_ = 0;
};

// Girth with a distinguished Unbounded value (forests) that compares greater
// than every integer, so "girth >= 5" filters accept acyclic graphs.
struct Girth {
    bool unbounded = false;
    std::uint32_t value = 0; // meaningful only when !unbounded

    static Girth bounded(std::uint32_t g) { return Girth{false, g}; }
    static Girth infinite() { return Girth{true, 0}; }

    bool at_least(std::uint32_t k) const { return unbounded || value >= k; }
    std::string to_string() const { return unbounded ? "unbounded" : std::to_string(value); }

    friend bool operator==(const Girth&, const Girth&) = default;
};

// Length of a shortest cycle; Unbounded for forests.
Girth girth(const RotationGraph& g);

// The square graph: same vertex set, u ~ v iff 1 <= d_G(u,v) <= 2.
// Adjacency lists are sorted ascending.
struct SquareGraph {
    std::vector<std::vector<VertexId>> adj;

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adj.size()); }
    std::uint32_t degree(VertexId v) const { return static_cast<std::uint32_t>(adj[v].size()); }
    bool adjacent(VertexId u, VertexId v) const;
};

SquareGraph square(const RotationGraph& g);

// BFS distances from source, capped at max_depth (farther vertices get
// UINT32_MAX). Shared by the square cross-checks and the audit's
// violation-linking.
std::vector<std::uint32_t> bfs_distances(const RotationGraph& g, VertexId source,
                                         std::uint32_t max_depth = std::numeric_limits<std::uint32_t>::max());

} // namespace p5g
