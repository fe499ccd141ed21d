#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace p5g {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

} // namespace

RotationGraph RotationGraph::from_rotations(std::vector<std::vector<VertexId>> rotations,
                                            std::vector<std::string> labels) {
    RotationGraph g;
    const auto n = static_cast<std::uint32_t>(rotations.size());

    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : rotations[v]) {
            if (u >= n)
                throw Error(ErrorCode::DanglingVertexId,
                            "vertex " + vname(v) + " lists neighbour " + vname(u) +
                                " but only " + std::to_string(n) + " vertices exist");
            if (u == v)
                throw Error(ErrorCode::Loop, "vertex " + vname(v) + " lists itself");
        }
    }

    g.position_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        for (std::uint32_t i = 0; i < rotations[v].size(); ++i) {
            VertexId u = rotations[v][i];
            if (!g.position_[v].emplace(u, i).second)
                throw Error(ErrorCode::ParallelEdge,
                            "vertex " + vname(v) + " lists neighbour " + vname(u) + " twice");
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : rotations[v]) {
            if (!g.position_[u].contains(v))
                throw Error(ErrorCode::AsymmetricAdjacency,
                            "vertex " + vname(v) + " lists " + vname(u) +
                                " but " + vname(u) + " does not list " + vname(v));
        }
    }

    std::uint64_t total = 0;
    for (VertexId v = 0; v < n; ++v) {
        total += rotations[v].size();
        g.max_degree_ = std::max<std::uint32_t>(g.max_degree_,
                                                static_cast<std::uint32_t>(rotations[v].size()));
    }
    g.edge_count_ = total / 2;
    g.rotation_ = std::move(rotations);
    if (!labels.empty() && labels.size() != n)
        throw Error(ErrorCode::BadParameter, "label count does not match vertex count");
    g.labels_ = std::move(labels);
    return g;
}

bool RotationGraph::adjacent(VertexId u, VertexId v) const {
    return position_[u].contains(v);
}

VertexId RotationGraph::rotation_successor(VertexId v, VertexId u) const {
    auto it = position_[v].find(u);
    if (it == position_[v].end())
        throw Error(ErrorCode::Internal,
                    "rotation_successor: " + vname(u) + " is not a neighbour of " + vname(v));
    const auto& rot = rotation_[v];
    return rot[(it->second + 1) % rot.size()];
}

bool RotationGraph::connected() const {
    const auto n = vertex_count();
    if (n <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue{0};
    seen[0] = 1;
    std::uint32_t reached = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : rotation_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    return reached == n;
}

Girth girth(const RotationGraph& g) {
    const auto n = g.vertex_count();
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t best = kInf;

    // BFS from every vertex; a non-tree edge (u,w) seen from u closes a walk
    // of length dist[u] + dist[w] + 1 through the root, which contains a
    // cycle of at most that length. The minimum over all roots is exact.
    std::vector<std::uint32_t> dist(n);
    std::vector<VertexId> parent(n);
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::deque<VertexId> queue{root};
        dist[root] = 0;
        parent[root] = root;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best)
                break; // every further candidate is dist[u] + dist[w] + 1 >= 2*dist[u]
            for (VertexId w : g.rotation(u)) {
                if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best == kInf ? Girth::infinite() : Girth::bounded(best);
}

bool SquareGraph::adjacent(VertexId u, VertexId v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

SquareGraph square(const RotationGraph& g) {
    const auto n = g.vertex_count();
    SquareGraph sq;
    sq.adj.resize(n);
    std::vector<VertexId> bucket;
    for (VertexId v = 0; v < n; ++v) {
        bucket.clear();
        for (VertexId u : g.rotation(v)) {
            bucket.push_back(u);
            for (VertexId w : g.rotation(u))
                if (w != v)
                    bucket.push_back(w);
        }
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        sq.adj[v] = bucket;
    }
    return sq;
}

std::vector<std::uint32_t> bfs_distances(const RotationGraph& g, VertexId source,
                                         std::uint32_t max_depth) {
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(g.vertex_count(), kInf);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (dist[v] >= max_depth)
            continue;
        for (VertexId u : g.rotation(v)) {
            if (dist[u] == kInf) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

} // namespace p5g
