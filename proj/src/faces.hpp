#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace p5g {

struct DirectedEdge {
    VertexId from = 0;
    VertexId to = 0;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// Faces of the embedding as boundary walks of directed edges. Every directed
// edge belongs to exactly one walk; a face's length l(f) counts edge sides,
// so a bridge contributes two sides to the same face and sum l(f) = 2|E|.
class FaceSet {
public:
    std::uint32_t face_count() const { return static_cast<std::uint32_t>(walks_.size()); }
    const std::vector<DirectedEdge>& walk(std::uint32_t face) const { return walks_[face]; }
    std::uint32_t length(std::uint32_t face) const { return static_cast<std::uint32_t>(walks_[face].size()); }

    // Face whose walk contains the directed edge (u,v).
    std::uint32_t face_of(VertexId u, VertexId v) const;

    // Vertex sequence of the walk: w[i] is the tail of the i-th directed edge.
    std::vector<VertexId> boundary_vertices(std::uint32_t face) const;

private:
    friend FaceSet trace_faces(const RotationGraph& g);

    std::vector<std::vector<DirectedEdge>> walks_;
    std::unordered_map<std::uint64_t, std::uint32_t> face_of_; // (from<<32 | to) -> face
};

// Traces all boundary walks of the rotation system. Convention (fixed, never
// configurable): the walk successor of the directed edge (u,v) is (v,w) where
// w is the rotation successor of u around v. Swapping clockwise for
// counterclockwise rotations only relabels which face is "outer"; the
// multiset of face lengths is unchanged.
FaceSet trace_faces(const RotationGraph& g);

// True iff the embedding has genus 0, i.e. |V| - |E| + |F| = 2.
// Throws Disconnected: Euler's identity is stated for connected graphs.
bool validate_planar_embedding(const RotationGraph& g, const FaceSet& faces);

} // namespace p5g
