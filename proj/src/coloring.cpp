#include "coloring.hpp"

#include <algorithm>
#include <numeric>

#include "structure.hpp"

namespace p5g {

namespace {

// Least color in [0, limit) not present among the colored square-neighbours
// of v, or kUncolored if every color is blocked.
std::int32_t least_available(const SquareGraph& sq, const std::vector<std::int32_t>& color,
                             VertexId v, std::uint32_t limit) {
    std::vector<char> used(limit, 0);
    for (VertexId u : sq.adj[v]) {
        const auto c = color[u];
        if (c >= 0 && static_cast<std::uint32_t>(c) < limit)
            used[c] = 1;
    }
    for (std::uint32_t c = 0; c < limit; ++c)
        if (!used[c])
            return static_cast<std::int32_t>(c);
    return kUncolored;
}

} // namespace

bool Coloring::total() const {
    return std::none_of(color.begin(), color.end(), [](std::int32_t c) { return c == kUncolored; });
}

std::uint32_t Coloring::colors_used() const {
    std::int32_t top = kUncolored;
    for (auto c : color)
        top = std::max(top, c);
    return static_cast<std::uint32_t>(top + 1);
}

std::optional<Conflict> find_conflict(const RotationGraph& g, const Coloring& c) {
    const SquareGraph sq = square(g);
    for (VertexId u = 0; u < sq.vertex_count(); ++u) {
        if (c.color[u] == kUncolored)
            continue;
        for (VertexId v : sq.adj[u])
            if (v > u && c.color[v] == c.color[u])
                return Conflict{u, v};
    }
    return std::nullopt;
}

Coloring greedy_square(const RotationGraph& g, std::span<const VertexId> order) {
    const auto n = g.vertex_count();
    std::vector<char> seen(n, 0);
    if (order.size() != n)
        throw Error(ErrorCode::BadParameter, "order is not a permutation of the vertex set");
    for (VertexId v : order) {
        if (v >= n || seen[v])
            throw Error(ErrorCode::BadParameter, "order is not a permutation of the vertex set");
        seen[v] = 1;
    }

    const SquareGraph sq = square(g);
    Coloring c{0, std::vector<std::int32_t>(n, kUncolored)};
    for (VertexId v : order)
        c.color[v] = least_available(sq, c.color, v, n == 0 ? 0 : n);
    c.palette = c.colors_used();
    return c;
}

Coloring dsatur(const RotationGraph& g) {
    const auto n = g.vertex_count();
    const SquareGraph sq = square(g);
    Coloring c{0, std::vector<std::int32_t>(n, kUncolored)};

    for (std::uint32_t step = 0; step < n; ++step) {
        VertexId pick = 0;
        std::int64_t best_sat = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (c.color[v] != kUncolored)
                continue;
            std::vector<std::int32_t> cols;
            for (VertexId u : sq.adj[v])
                if (c.color[u] != kUncolored)
                    cols.push_back(c.color[u]);
            std::sort(cols.begin(), cols.end());
            cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
            const auto sat = static_cast<std::int64_t>(cols.size());
            if (best_sat < 0 || sat > best_sat ||
                (sat == best_sat && sq.degree(v) > sq.degree(pick)) ||
                (sat == best_sat && sq.degree(v) == sq.degree(pick) && v < pick)) {
                best_sat = sat;
                pick = v;
            }
        }
        c.color[pick] = least_available(sq, c.color, pick, n);
    }
    c.palette = c.colors_used();
    return c;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SquareBits {
    std::uint32_t n = 0;
    std::uint32_t words = 0;
    std::vector<std::uint64_t> rows;

    explicit SquareBits(const SquareGraph& sq)
        : n(sq.vertex_count()), words((sq.vertex_count() + 63) / 64), rows(std::size_t(n) * words, 0) {
        for (VertexId v = 0; v < n; ++v)
            for (VertexId u : sq.adj[v])
                rows[std::size_t(v) * words + u / 64] |= std::uint64_t(1) << (u % 64);
    }

    bool adjacent(VertexId v, VertexId u) const {
        return rows[std::size_t(v) * words + u / 64] >> (u % 64) & 1;
    }
};

struct DeadlineHit {};

// DSATUR-guided backtracking test for k-colorability of the square. New color
// indices are opened in order, so color classes carry no symmetry.
class KColorSearch {
public:
    KColorSearch(const SquareGraph& sq, std::uint32_t k, Clock::time_point deadline)
        : sq_(sq), k_(k), deadline_(deadline), color_(sq.vertex_count(), kUncolored) {}

    bool run() { return descend(0, 0); }

    const std::vector<std::int32_t>& colors() const { return color_; }

private:
    bool descend(std::uint32_t colored, std::uint32_t used) {
        if (Clock::now() > deadline_)
            throw DeadlineHit{};
        const auto n = sq_.vertex_count();
        if (colored == n)
            return true;

        VertexId pick = n;
        std::int64_t best_sat = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (color_[v] != kUncolored)
                continue;
            const auto sat = saturation(v);
            if (best_sat < 0 || sat > best_sat ||
                (sat == best_sat && sq_.degree(v) > sq_.degree(pick)) ||
                (sat == best_sat && sq_.degree(v) == sq_.degree(pick) && v < pick)) {
                best_sat = sat;
                pick = v;
            }
        }

        std::vector<char> forbidden(k_, 0);
        for (VertexId u : sq_.adj[pick])
            if (color_[u] != kUncolored)
                forbidden[color_[u]] = 1;
        const std::uint32_t top = std::min(k_, used + 1);
        for (std::uint32_t c = 0; c < top; ++c) {
            if (forbidden[c])
                continue;
            color_[pick] = static_cast<std::int32_t>(c);
            if (descend(colored + 1, std::max(used, c + 1)))
                return true;
            color_[pick] = kUncolored;
        }
        return false;
    }

    std::int64_t saturation(VertexId v) const {
        std::vector<char> used(k_, 0);
        std::int64_t sat = 0;
        for (VertexId u : sq_.adj[v]) {
            const auto c = color_[u];
            if (c != kUncolored && !used[c]) {
                used[c] = 1;
                ++sat;
            }
        }
        return sat;
    }

    const SquareGraph& sq_;
    std::uint32_t k_;
    Clock::time_point deadline_;
    std::vector<std::int32_t> color_;
};

std::uint32_t greedy_clique_bound(const RotationGraph& g, const SquareGraph& sq,
                                  const SquareBits& bits) {
    const auto n = g.vertex_count();
    if (n == 0)
        return 0;

    std::vector<VertexId> by_sq_degree(n);
    std::iota(by_sq_degree.begin(), by_sq_degree.end(), 0);
    std::sort(by_sq_degree.begin(), by_sq_degree.end(), [&](VertexId a, VertexId b) {
        if (sq.degree(a) != sq.degree(b))
            return sq.degree(a) > sq.degree(b);
        return a < b;
    });

    auto extend = [&](std::vector<VertexId> clique) {
        for (VertexId v : by_sq_degree) {
            bool universal = std::all_of(clique.begin(), clique.end(), [&](VertexId u) {
                return u != v && bits.adjacent(v, u);
            });
            if (universal && std::find(clique.begin(), clique.end(), v) == clique.end())
                clique.push_back(v);
        }
        return static_cast<std::uint32_t>(clique.size());
    };

    // Closed G-neighbourhood of a maximum-degree vertex is a clique in the
    // square, so the bound is always at least Delta(g) + 1.
    VertexId hub = 0;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) > g.degree(hub))
            hub = v;
    std::vector<VertexId> seeded{hub};
    for (VertexId u : g.rotation(hub))
        seeded.push_back(u);

    return std::max(extend(std::move(seeded)), extend({by_sq_degree[0]}));
}

} // namespace

ExactResult exact_chi2(const RotationGraph& g, std::chrono::milliseconds budget) {
    const auto n = g.vertex_count();
    if (n == 0)
        return {0, Coloring{0, {}}};

    const auto deadline = Clock::now() + budget;
    const SquareGraph sq = square(g);
    const SquareBits bits(sq);

    Coloring upper_witness = dsatur(g);
    const std::uint32_t ub = upper_witness.palette;
    const std::uint32_t lb = greedy_clique_bound(g, sq, bits);

    std::uint32_t proven = lb; // every k < proven is known uncolorable
    for (std::uint32_t k = lb; k < ub; ++k) {
        KColorSearch search(sq, k, deadline);
        try {
            if (search.run()) {
                Coloring witness{k, search.colors()};
                return {k, std::move(witness)};
            }
        } catch (const DeadlineHit&) {
            throw p5g::BudgetExceeded(proven, ub);
        }
        proven = k + 1;
    }
    return {ub, std::move(upper_witness)};
}

Coloring extend_light(const RotationGraph& g, const Coloring& partial, VertexId v,
                      std::uint32_t delta) {
    const auto n = g.vertex_count();
    if (v >= n || partial.color.size() != n)
        throw Error(ErrorCode::PreconditionViolated, "vertex id or coloring size out of range");
    const std::uint32_t palette = delta + 4;
    if (partial.palette != palette)
        throw Error(ErrorCode::PreconditionViolated,
                    "palette must be delta + 4 = " + std::to_string(palette));
    if (partial.color[v] != kUncolored)
        throw Error(ErrorCode::PreconditionViolated, "vertex " + std::to_string(v) + " is colored");
    for (VertexId u = 0; u < n; ++u) {
        if (u == v)
            continue;
        if (partial.color[u] == kUncolored)
            throw Error(ErrorCode::PreconditionViolated,
                        "vertex " + std::to_string(u) + " is uncolored besides " + std::to_string(v));
        if (static_cast<std::uint32_t>(partial.color[u]) >= palette)
            throw Error(ErrorCode::PreconditionViolated,
                        "vertex " + std::to_string(u) + " uses a color outside the palette");
    }
    if (find_conflict(g, partial))
        throw Error(ErrorCode::PreconditionViolated, "partial coloring is not valid");

    const StructuralProfile p = profile(g, delta);
    const auto& pv = p.vertices[v];
    if (pv.degree_sum >= static_cast<std::uint64_t>(delta) + 4 + pv.n_light)
        throw Error(ErrorCode::PreconditionViolated,
                    "vertex " + std::to_string(v) + " is heavy; nothing is guaranteed");

    std::vector<VertexId> light_set, recolor_late;
    for (VertexId u : g.rotation(v)) {
        if (p.vertices[u].light)
            light_set.push_back(u);
        if (p.vertices[u].degree == 2 && p.vertices[u].n3 > 0)
            recolor_late.push_back(u); // a 2-vertex with a 3-neighbour is light
    }
    std::sort(light_set.begin(), light_set.end());
    std::sort(recolor_late.begin(), recolor_late.end());

    const SquareGraph sq = square(g);
    Coloring out = partial;
    for (VertexId u : light_set)
        out.color[u] = kUncolored;

    auto assign = [&](VertexId w) {
        const auto c = least_available(sq, out.color, w, palette);
        if (c == kUncolored)
            throw Error(ErrorCode::ExtensionFailed,
                        "no available color for vertex " + std::to_string(w));
        out.color[w] = c;
    };

    assign(v);
    for (VertexId u : light_set)
        if (!std::binary_search(recolor_late.begin(), recolor_late.end(), u))
            assign(u);
    for (VertexId u : recolor_late)
        assign(u);
    return out;
}

} // namespace p5g
