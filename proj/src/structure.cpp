#include "structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace p5g {

namespace {

std::vector<VertexId> sorted_neighbors(const RotationGraph& g, VertexId v) {
    std::vector<VertexId> out(g.rotation(v).begin(), g.rotation(v).end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string ids(const std::vector<VertexId>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(vs[i]);
    }
    return s;
}

} // namespace

const char* rule_id_name(RuleId rule) {
    switch (rule) {
    case RuleId::Cor2a: return "Cor2a";
    case RuleId::Cor2b: return "Cor2b";
    case RuleId::Cor2c: return "Cor2c";
    case RuleId::Lem1a: return "Lem1a";
    case RuleId::Lem1b: return "Lem1b";
    case RuleId::Lem1c: return "Lem1c";
    case RuleId::Lem2a: return "Lem2a";
    case RuleId::Lem2b: return "Lem2b";
    case RuleId::Lem2c: return "Lem2c";
    case RuleId::Lem3: return "Lem3";
    case RuleId::Prop2: return "Prop2";
    }
    return "?";
}

StructuralProfile profile(const RotationGraph& g, std::uint32_t delta) {
    const auto n = g.vertex_count();
    StructuralProfile p;
    p.delta = delta;
    p.max_degree = g.max_degree();
    if (delta < p.max_degree)
        throw Error(ErrorCode::DeltaTooSmall,
                    "delta " + std::to_string(delta) + " is below the maximum degree " +
                        std::to_string(p.max_degree));
    p.delta_above_max = delta > p.max_degree;
    p.vertices.resize(n);

    for (VertexId v = 0; v < n; ++v)
        p.vertices[v].degree = g.degree(v);

    for (VertexId v = 0; v < n; ++v) {
        auto& pv = p.vertices[v];
        for (VertexId u : g.rotation(v)) {
            const auto du = p.vertices[u].degree;
            pv.degree_sum += du;
            if (du == 2)
                ++pv.n2;
            else if (du == 3)
                ++pv.n3;
            if (du == 2) {
                bool has3 = false;
                for (VertexId w : g.rotation(u))
                    has3 |= p.vertices[w].degree == 3;
                if (has3)
                    ++pv.n2_with_3;
            }
        }
    }

    const std::uint64_t base = static_cast<std::uint64_t>(delta) + 4;
    for (VertexId v = 0; v < n; ++v) {
        auto& pv = p.vertices[v];
        pv.light = pv.degree >= 2 && pv.degree_sum < base + pv.n2_with_3;
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& pv = p.vertices[v];
        for (VertexId u : g.rotation(v))
            if (p.vertices[u].light)
                ++pv.n_light;
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& pv = p.vertices[v];
        pv.heavy = pv.degree >= 2 && pv.degree_sum >= base + pv.n_light;
        if (pv.n2_with_3 > pv.n_light || (pv.light && pv.heavy))
            throw Error(ErrorCode::Internal,
                        "profile invariant broken at vertex " + std::to_string(v));
    }
    return p;
}

std::vector<WeakNeighbor> weak_neighbors(const RotationGraph& g, VertexId v) {
    std::vector<WeakNeighbor> out;
    for (VertexId m : g.rotation(v)) {
        if (g.degree(m) != 2)
            continue;
        for (VertexId w : g.rotation(m))
            if (w != v)
                out.push_back({w, m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> poor_vertices(const RotationGraph& g, const FaceSet& faces) {
    std::vector<std::vector<VertexId>> out(faces.face_count());
    for (std::uint32_t f = 0; f < faces.face_count(); ++f) {
        const auto walk = faces.boundary_vertices(f);
        const auto len = walk.size();
        std::unordered_set<VertexId> poor;
        for (std::size_t i = 0; i < len; ++i) {
            VertexId x = walk[(i + len - 1) % len];
            VertexId y = walk[i];
            VertexId z = walk[(i + 1) % len];
            if (g.degree(y) >= 5 && g.degree(y) <= 6 && g.degree(x) == 2 && g.degree(z) == 2)
                poor.insert(y);
        }
        if (poor.size() > len / 2)
            throw Error(ErrorCode::CapViolation,
                        "face " + std::to_string(f) + " has " + std::to_string(poor.size()) +
                            " poor vertices, above floor(l/2) = " + std::to_string(len / 2));
        out[f].assign(poor.begin(), poor.end());
        std::sort(out[f].begin(), out[f].end());
    }
    return out;
}

ViolationReport check_reducible(const RotationGraph& g, std::uint32_t delta) {
    const StructuralProfile p = profile(g, delta);
    const auto n = g.vertex_count();
    ViolationReport report;
    auto add = [&](RuleId rule, std::vector<VertexId> witnesses, std::string message) {
        std::sort(witnesses.begin(), witnesses.end());
        report.findings.push_back({rule, std::move(witnesses), std::move(message)});
    };
    auto deg = [&](VertexId v) { return p.vertices[v].degree; };
    auto two_neighbors = [&](VertexId v) {
        std::vector<VertexId> out;
        for (VertexId u : sorted_neighbors(g, v))
            if (deg(u) == 2)
                out.push_back(u);
        return out;
    };

    // Cor. 2(a): adjacent 2-vertices.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 2)
            continue;
        for (VertexId u : sorted_neighbors(g, v))
            if (u > v && deg(u) == 2)
                add(RuleId::Cor2a, {v, u},
                    "2-vertices " + std::to_string(v) + " and " + std::to_string(u) +
                        " are adjacent");
    }

    // Cor. 2(b): a 3-vertex with two or more 2-neighbours.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 3 || p.vertices[v].n2 < 2)
            continue;
        auto twos = two_neighbors(v);
        std::vector<VertexId> w{v};
        w.insert(w.end(), twos.begin(), twos.end());
        add(RuleId::Cor2b, w,
            "3-vertex " + std::to_string(v) + " has 2-neighbours {" + ids(twos) + "}");
    }

    // Cor. 2(c): a 4(4)-vertex.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 4 || p.vertices[v].n2 != 4)
            continue;
        auto twos = two_neighbors(v);
        std::vector<VertexId> w{v};
        w.insert(w.end(), twos.begin(), twos.end());
        add(RuleId::Cor2c, w, "4-vertex " + std::to_string(v) + " has four 2-neighbours");
    }

    // Lemma 1(a): a 3-vertex with a 2-neighbour must be heavy.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 3 || p.vertices[v].n2 == 0 || p.vertices[v].heavy)
            continue;
        auto twos = two_neighbors(v);
        std::vector<VertexId> w{v};
        w.insert(w.end(), twos.begin(), twos.end());
        add(RuleId::Lem1a,
            w, "3-vertex " + std::to_string(v) + " has a 2-neighbour but is not heavy");
    }

    // Lemma 1(b): a light 3(0)-vertex's 3-neighbour must have a 12+-neighbour.
    for (VertexId v = 0; v < n; ++v) {
        if (!p.vertices[v].light || !p.vertices[v].is_kd(3, 0))
            continue;
        for (VertexId x : sorted_neighbors(g, v)) {
            if (deg(x) != 3)
                continue;
            bool has_big = false;
            for (VertexId y : g.rotation(x))
                has_big |= deg(y) >= 12;
            if (!has_big)
                add(RuleId::Lem1b, {v, x},
                    "light 3(0)-vertex " + std::to_string(v) + " has 3-neighbour " +
                        std::to_string(x) + " with no 12+-neighbour");
        }
    }

    // Lemma 1(c): no adjacent 3(1)-vertices.
    for (VertexId v = 0; v < n; ++v) {
        if (!p.vertices[v].is_kd(3, 1))
            continue;
        for (VertexId u : sorted_neighbors(g, v))
            if (u > v && p.vertices[u].is_kd(3, 1))
                add(RuleId::Lem1c, {v, u},
                    "3(1)-vertices " + std::to_string(v) + " and " + std::to_string(u) +
                        " are adjacent");
    }

    // Lemma 2(a): a 4-vertex with a 2-neighbour must be heavy.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 4 || p.vertices[v].n2 == 0 || p.vertices[v].heavy)
            continue;
        auto twos = two_neighbors(v);
        std::vector<VertexId> w{v};
        w.insert(w.end(), twos.begin(), twos.end());
        add(RuleId::Lem2a,
            w, "4-vertex " + std::to_string(v) + " has a 2-neighbour but is not heavy");
    }

    // Lemma 2(b): a 4-vertex with two 2-neighbours and a 3(1)-neighbour forces
    // all of them heavy and a 20+-neighbour.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 4 || p.vertices[v].n2 < 2)
            continue;
        auto twos = two_neighbors(v);
        bool big = false;
        for (VertexId u : g.rotation(v))
            big |= deg(u) >= 20;
        for (VertexId x3 : sorted_neighbors(g, v)) {
            if (!p.vertices[x3].is_kd(3, 1))
                continue;
            bool twos_heavy = true;
            for (VertexId x : twos)
                twos_heavy &= p.vertices[x].heavy;
            if (twos_heavy && p.vertices[x3].heavy && big)
                continue;
            std::vector<VertexId> w{v, x3};
            w.insert(w.end(), twos.begin(), twos.end());
            std::string why = !twos_heavy          ? "a non-heavy 2-neighbour"
                              : !p.vertices[x3].heavy ? "a non-heavy 3(1)-neighbour"
                                                      : "no 20+-neighbour";
            add(RuleId::Lem2b, w,
                "4-vertex " + std::to_string(v) + " with 2-neighbours and 3(1)-neighbour " +
                    std::to_string(x3) + " has " + why);
        }
    }

    // Lemma 2(c): a 4-vertex with three 2-neighbours forces them all heavy.
    for (VertexId v = 0; v < n; ++v) {
        if (deg(v) != 4 || p.vertices[v].n2 < 3)
            continue;
        std::vector<VertexId> bad;
        for (VertexId x : two_neighbors(v))
            if (!p.vertices[x].heavy)
                bad.push_back(x);
        if (bad.empty())
            continue;
        std::vector<VertexId> w{v};
        w.insert(w.end(), bad.begin(), bad.end());
        add(RuleId::Lem2c, w,
            "4-vertex " + std::to_string(v) + " has three 2-neighbours, of which {" + ids(bad) +
                "} are not heavy");
    }

    // Lemma 3: a k-vertex (5 <= k <= 12) with k-1 2-neighbours, r >= 1 of them
    // light, must have a neighbour of degree at least delta + 6 + r - 2k.
    for (VertexId v = 0; v < n; ++v) {
        const auto k = deg(v);
        if (k < 5 || k > 12 || p.vertices[v].n2 != k - 1)
            continue;
        std::uint32_t r = 0;
        for (VertexId x : g.rotation(v))
            if (deg(x) == 2 && p.vertices[x].light)
                ++r;
        if (r == 0)
            continue;
        const std::int64_t threshold =
            static_cast<std::int64_t>(delta) + 6 + r - 2 * static_cast<std::int64_t>(k);
        std::int64_t best = 0;
        VertexId z = v;
        for (VertexId x : sorted_neighbors(g, v)) {
            best = std::max<std::int64_t>(best, deg(x));
            if (deg(x) != 2)
                z = x; // the unique non-2 neighbour
        }
        if (best < threshold)
            add(RuleId::Lem3, {v, z},
                std::to_string(k) + "(" + std::to_string(k - 1) + ")-vertex " + std::to_string(v) +
                    " with " + std::to_string(r) + " light 2-neighbours has no neighbour of degree >= " +
                    std::to_string(threshold));
    }

    // Prop. 2: every neighbour of a light vertex is heavy.
    for (VertexId v = 0; v < n; ++v) {
        if (!p.vertices[v].light)
            continue;
        for (VertexId u : sorted_neighbors(g, v))
            if (deg(u) >= 2 && !p.vertices[u].heavy)
                add(RuleId::Prop2, {v, u},
                    "vertex " + std::to_string(v) + " is light but its neighbour " +
                        std::to_string(u) + " is not heavy");
    }

    for (VertexId v = 0; v < n; ++v)
        if (deg(v) <= 1)
            report.sub_min_degree.push_back(v);

    std::stable_sort(report.findings.begin(), report.findings.end(),
                     [](const Finding& a, const Finding& b) {
                         if (a.rule != b.rule)
                             return a.rule < b.rule;
                         if (a.witnesses != b.witnesses)
                             return a.witnesses < b.witnesses;
                         return a.message < b.message;
                     });
    return report;
}

std::vector<std::string> poor_cap_refinement_notes(const RotationGraph& g, const FaceSet& faces,
                                                   const std::vector<std::vector<VertexId>>& poor) {
    std::vector<std::string> notes;
    for (std::uint32_t f = 0; f < faces.face_count(); ++f) {
        if (poor[f].empty())
            continue;
        const auto walk = faces.boundary_vertices(f);
        std::unordered_set<VertexId> on_face(walk.begin(), walk.end());
        for (VertexId y : poor[f]) {
            std::unordered_set<VertexId> big_weak;
            for (const auto& wn : weak_neighbors(g, y))
                if (g.degree(wn.neighbor) >= 7 && on_face.contains(wn.neighbor))
                    big_weak.insert(wn.neighbor);
            if (big_weak.size() < 2)
                continue;
            const std::uint32_t len = faces.length(f);
            const std::uint32_t cap = len >= 3 ? (len - 3) / 2 : 0;
            notes.push_back("face " + std::to_string(f) + ": poor vertex " + std::to_string(y) +
                            " is weak-adjacent to two 7+-vertices on the face; refined cap floor((l-3)/2) = " +
                            std::to_string(cap) + ", poor count = " + std::to_string(poor[f].size()) +
                            (poor[f].size() <= cap ? " (holds)" : " (exceeded)"));
            break;
        }
    }
    return notes;
}

} // namespace p5g
