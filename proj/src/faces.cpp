#include "faces.hpp"

namespace p5g {

namespace {

std::uint64_t key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

std::uint32_t FaceSet::face_of(VertexId u, VertexId v) const {
    auto it = face_of_.find(key(u, v));
    if (it == face_of_.end())
        throw Error(ErrorCode::Internal, "face_of: no such directed edge");
    return it->second;
}

std::vector<VertexId> FaceSet::boundary_vertices(std::uint32_t face) const {
    std::vector<VertexId> out;
    out.reserve(walks_[face].size());
    for (const auto& e : walks_[face])
        out.push_back(e.from);
    return out;
}

FaceSet trace_faces(const RotationGraph& g) {
    FaceSet fs;
    const auto n = g.vertex_count();
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.rotation(u)) {
            if (fs.face_of_.contains(key(u, v)))
                continue;
            std::uint32_t id = fs.face_count();
            std::vector<DirectedEdge> walk;
            VertexId a = u, b = v;
            do {
                walk.push_back({a, b});
                fs.face_of_.emplace(key(a, b), id);
                VertexId c = g.rotation_successor(b, a);
                a = b;
                b = c;
            } while (!(a == u && b == v));
            fs.walks_.push_back(std::move(walk));
        }
    }
    return fs;
}

bool validate_planar_embedding(const RotationGraph& g, const FaceSet& faces) {
    if (!g.connected())
        throw Error(ErrorCode::Disconnected, "Euler test requires a connected graph");
    const std::int64_t v = g.vertex_count();
    const std::int64_t e = static_cast<std::int64_t>(g.edge_count());
    const std::int64_t f = faces.face_count();
    return v - e + f == 2;
}

} // namespace p5g
