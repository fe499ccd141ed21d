#include <doctest.h>

#include <algorithm>
#include <map>

#include "corpus.hpp"
#include "faces.hpp"
#include "oracles.hpp"
#include "structure.hpp"

using namespace p5g;

namespace {

// Tree builder: grow(parent, count) attaches `count` fresh leaves to parent
// and returns their ids. Keeps fixture construction readable.
struct TreeBuilder {
    std::vector<std::vector<VertexId>> rot;

    VertexId add() {
        rot.emplace_back();
        return static_cast<VertexId>(rot.size() - 1);
    }

    void link(VertexId a, VertexId b) {
        rot[a].push_back(b);
        rot[b].push_back(a);
    }

    std::vector<VertexId> grow(VertexId parent, std::uint32_t count) {
        std::vector<VertexId> out;
        for (std::uint32_t i = 0; i < count; ++i) {
            auto leaf = add();
            link(parent, leaf);
            out.push_back(leaf);
        }
        return out;
    }

    RotationGraph build() { return RotationGraph::from_rotations(rot); }
};

std::size_t count_rule(const ViolationReport& r, RuleId rule) {
    return std::count_if(r.findings.begin(), r.findings.end(),
                         [&](const Finding& f) { return f.rule == rule; });
}

} // namespace

TEST_SUITE("structure") {

TEST_CASE("a 2-vertex next to a 3-vertex is light") {
    // v(2) with neighbours of degree 3 and 22, delta 22: D = 25 < 26.
    TreeBuilder t;
    auto v = t.add(), a = t.add(), b = t.add();
    t.link(v, a);
    t.link(v, b);
    t.grow(a, 2);  // degree 3
    t.grow(b, 21); // degree 22
    auto g = t.build();
    auto p = profile(g, 22);
    CHECK(p.vertices[v].degree_sum == 25);
    CHECK(p.vertices[v].n2_with_3 == 0);
    CHECK(p.vertices[v].light);
    CHECK_FALSE(p.vertices[v].heavy);
}

TEST_CASE("a 2-vertex between two 22-vertices is not light") {
    TreeBuilder t;
    auto v = t.add(), a = t.add(), b = t.add();
    t.link(v, a);
    t.link(v, b);
    t.grow(a, 21);
    t.grow(b, 21);
    auto g = t.build();
    auto p = profile(g, 22);
    CHECK(p.vertices[v].degree_sum == 44);
    CHECK_FALSE(p.vertices[v].light);
    CHECK(p.vertices[v].heavy); // 44 >= 26 + 0
}

TEST_CASE("heavy boundary: D = 27 = delta + 4 + n_light") {
    // 3-vertex with a light 2-neighbour and neighbours of degree 12 and 13.
    TreeBuilder t;
    auto v = t.add(), x = t.add(), big12 = t.add(), big13 = t.add();
    t.link(v, x);
    t.link(v, big12);
    t.link(v, big13);
    t.grow(x, 1); // x is a 2-vertex
    for (auto u : t.grow(big12, 11))
        t.grow(u, 2); // keep big12's neighbours at degree 3 so big12 is not light
    for (auto u : t.grow(big13, 12))
        t.grow(u, 2);
    auto g = t.build();
    auto p = profile(g, 22);
    REQUIRE(g.degree(v) == 3);
    CHECK(p.vertices[v].degree_sum == 27);
    CHECK(p.vertices[x].light);
    CHECK(p.vertices[v].n_light == 1);
    CHECK_FALSE(p.vertices[v].light); // 27 >= 26 + n_2^3 = 27
    CHECK(p.vertices[v].heavy);       // 27 >= 26 + n_light = 27, boundary
}

TEST_CASE("profile rejects delta below the max degree and flags delta above it") {
    auto g = gen_dodecahedron();
    CHECK_THROWS_AS((void)profile(g, 2), Error);
    CHECK_FALSE(profile(g, 3).delta_above_max);
    CHECK(profile(g, 22).delta_above_max);
}

TEST_CASE("light and heavy stay disjoint and n_2^3 <= n_light on corpus graphs") {
    std::vector<RotationGraph> graphs;
    graphs.push_back(gen_dodecahedron());
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        graphs.push_back(gen_girth5_random(6, 15, seed));
    for (const auto& g : graphs) {
        for (std::uint32_t delta : {g.max_degree(), 22u, 40u}) {
            if (delta < g.max_degree())
                continue;
            auto p = profile(g, delta);
            auto naive = oracles::classify_naive(g, delta);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                CHECK_FALSE((p.vertices[v].light && p.vertices[v].heavy));
                CHECK(p.vertices[v].n2_with_3 <= p.vertices[v].n_light);
                CHECK(p.vertices[v].light == naive.light[v]);
                CHECK(p.vertices[v].heavy == naive.heavy[v]);
            }
        }
    }
}

TEST_CASE("weak neighbours of a path midpoint's ends") {
    auto g = RotationGraph::from_rotations({{1}, {0, 2}, {1}});
    auto w0 = weak_neighbors(g, 0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].neighbor == 2);
    CHECK(w0[0].middle == 1);
    CHECK(weak_neighbors(g, 1).empty());
}

TEST_CASE("every C5 vertex has two weak neighbours") {
    auto g = gen_cycle(5);
    for (VertexId v = 0; v < 5; ++v) {
        auto w = weak_neighbors(g, v);
        CHECK(w.size() == 2);
    }
}

TEST_CASE("spider center is weak-adjacent to every leg endpoint") {
    auto g = gen_spider(22, 2);
    auto w = weak_neighbors(g, 0);
    REQUIRE(w.size() == 22);
    for (const auto& [nbr, mid] : w) {
        CHECK(g.degree(mid) == 2);
        CHECK(g.degree(nbr) == 1);
        CHECK(g.adjacent(mid, nbr));
        CHECK(g.adjacent(0, mid));
    }
}

TEST_CASE("weak adjacency is symmetric") {
    std::vector<RotationGraph> graphs;
    graphs.push_back(gen_cycle(8));
    graphs.push_back(gen_spider(9, 3));
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        graphs.push_back(gen_girth5_random(6, 12, seed));
    for (const auto& g : graphs) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            for (const auto& wn : weak_neighbors(g, v)) {
                auto back = weak_neighbors(g, wn.neighbor);
                CHECK(std::count_if(back.begin(), back.end(), [&](const WeakNeighbor& b) {
                          return b.neighbor == v && b.middle == wn.middle;
                      }) == 1);
            }
        }
    }
}

TEST_CASE("poor vertices on a decorated 10-cycle") {
    // C10 with three pendant 2-paths at vertices 0 and 5: both become
    // 5-vertices flanked by 2-vertices on the clean cycle face.
    std::vector<std::vector<VertexId>> rot(10);
    for (VertexId i = 0; i < 10; ++i)
        rot[i] = {(i + 9) % 10, (i + 1) % 10};
    auto graft = [&](VertexId at) {
        for (int leg = 0; leg < 3; ++leg) {
            auto a = static_cast<VertexId>(rot.size());
            rot[at].push_back(a);
            rot.push_back({at, a + 1});
            rot.push_back({a});
        }
    };
    graft(0);
    graft(5);
    auto g = RotationGraph::from_rotations(rot);
    REQUIRE(g.degree(0) == 5);
    REQUIRE(g.degree(5) == 5);
    auto faces = trace_faces(g);
    auto poor = poor_vertices(g, faces);
    bool found_clean_face = false;
    for (std::uint32_t f = 0; f < faces.face_count(); ++f) {
        CHECK(poor[f].size() <= faces.length(f) / 2);
        if (faces.length(f) == 10) {
            found_clean_face = true;
            CHECK(poor[f] == std::vector<VertexId>{0, 5});
        }
    }
    CHECK(found_clean_face);
}

TEST_CASE("dodecahedron has no poor vertices") {
    auto g = gen_dodecahedron();
    auto faces = trace_faces(g);
    for (const auto& set : poor_vertices(g, faces))
        CHECK(set.empty());
}

TEST_CASE("adjacent 2-vertices are reported (Cor. 2a)") {
    auto g = RotationGraph::from_rotations({{1}, {0, 2}, {1, 3}, {2}});
    auto r = check_reducible(g, 22);
    REQUIRE(count_rule(r, RuleId::Cor2a) == 1);
    CHECK(r.findings[0].rule == RuleId::Cor2a);
    CHECK(r.findings[0].witnesses == std::vector<VertexId>{1, 2});
    CHECK(r.sub_min_degree == std::vector<VertexId>{0, 3});
}

TEST_CASE("a 3-vertex with two 2-neighbours is reported (Cor. 2b)") {
    TreeBuilder t;
    auto v = t.add(), x1 = t.add(), x2 = t.add();
    t.link(v, x1);
    t.link(v, x2);
    t.grow(v, 1);
    t.grow(x1, 1);
    t.grow(x2, 1);
    auto r = check_reducible(t.build(), 22);
    REQUIRE(count_rule(r, RuleId::Cor2b) == 1);
    auto it = std::find_if(r.findings.begin(), r.findings.end(),
                           [](const Finding& f) { return f.rule == RuleId::Cor2b; });
    CHECK(it->witnesses == std::vector<VertexId>{v, x1, x2});
}

TEST_CASE("a subdivided K_{1,4} center is a 4(4)-vertex (Cor. 2c)") {
    auto g = gen_spider(4, 2);
    auto r = check_reducible(g, 22);
    CHECK(count_rule(r, RuleId::Cor2c) == 1);
}

TEST_CASE("dodecahedron Prop2 findings toggle with delta") {
    auto g = gen_dodecahedron();
    auto hot = check_reducible(g, 22);
    // Every vertex is light at delta 22 (D = 9 < 26), so every ordered edge
    // pairs a light vertex with a non-heavy neighbour.
    CHECK(count_rule(hot, RuleId::Prop2) == 60);
    auto cold = check_reducible(g, 3);
    CHECK(count_rule(cold, RuleId::Prop2) == 0);
}

TEST_CASE("Prop2 witnesses match the naive classification oracle") {
    std::vector<RotationGraph> graphs;
    graphs.push_back(gen_dodecahedron());
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        graphs.push_back(gen_girth5_random(5, 18, seed));
    for (const auto& g : graphs) {
        const std::uint32_t delta = std::max(22u, g.max_degree());
        auto r = check_reducible(g, delta);
        std::vector<std::vector<VertexId>> got;
        for (const auto& f : r.findings)
            if (f.rule == RuleId::Prop2)
                got.push_back(f.witnesses);
        std::sort(got.begin(), got.end());
        CHECK(got == oracles::prop2_pairs_naive(g, delta));
    }
}

TEST_CASE("Lem3: a 5(4)-vertex with a light 2-neighbour needs a big neighbour") {
    TreeBuilder t;
    auto v = t.add();
    std::vector<VertexId> mids, tips;
    for (int i = 0; i < 4; ++i) {
        auto x = t.add();
        t.link(v, x);
        mids.push_back(x);
    }
    auto z = t.add();
    t.link(v, z);
    t.grow(z, 17); // degree 18 < threshold 19
    auto y1 = t.add();
    t.link(mids[0], y1);
    t.grow(y1, 2); // degree 3: makes mids[0] light, r = 1
    for (int i = 1; i < 4; ++i) {
        auto y = t.add();
        t.link(mids[i], y);
        t.grow(y, 21); // degree 22: mids[i] not light
    }
    auto g = t.build();
    REQUIRE(g.max_degree() == 22);
    auto r = check_reducible(g, 22);
    REQUIRE(count_rule(r, RuleId::Lem3) == 1);
    auto it = std::find_if(r.findings.begin(), r.findings.end(),
                           [](const Finding& f) { return f.rule == RuleId::Lem3; });
    CHECK(it->witnesses == std::vector<VertexId>{v, z});

    // Raising z's degree to the threshold clears the finding.
    t.grow(z, 1);
    auto r2 = check_reducible(t.build(), 22);
    CHECK(count_rule(r2, RuleId::Lem3) == 0);
}

TEST_CASE("Lem2b: the fourth neighbour must reach degree 20") {
    // 4-vertex v with two heavy 2-neighbours, a heavy 3(1)-neighbour, and a
    // fourth neighbour of degree 19: only the 20+ clause fails.
    TreeBuilder t;
    auto pendant_paths = [&](VertexId at, std::uint32_t count) {
        for (std::uint32_t i = 0; i < count; ++i) {
            auto mid = t.add();
            t.link(at, mid);
            t.grow(mid, 1);
        }
    };
    auto v = t.add(), x1 = t.add(), x2 = t.add(), x3 = t.add(), z = t.add();
    for (auto u : {x1, x2, x3, z})
        t.link(v, u);
    for (auto x : {x1, x2}) {
        auto hub = t.add();
        t.link(x, hub);
        pendant_paths(hub, 21); // degree 22, not light: x stays heavy
    }
    auto m = t.add();
    t.link(x3, m);
    t.grow(m, 1); // x3 is a 3(1)-vertex
    auto big = t.add();
    t.link(x3, big);
    pendant_paths(big, 21); // x3's heavy certificate
    pendant_paths(z, 18);   // degree 19 < 20

    auto g = t.build();
    auto p = profile(g, 22);
    REQUIRE(p.vertices[x1].heavy);
    REQUIRE(p.vertices[x2].heavy);
    REQUIRE(p.vertices[x3].heavy);
    auto r = check_reducible(g, 22);
    REQUIRE(count_rule(r, RuleId::Lem2b) == 1);
    auto it = std::find_if(r.findings.begin(), r.findings.end(),
                           [](const Finding& f) { return f.rule == RuleId::Lem2b; });
    CHECK(it->message.find("no 20+-neighbour") != std::string::npos);

    t.grow(z, 2); // degree 21 clears the finding
    CHECK(count_rule(check_reducible(t.build(), 22), RuleId::Lem2b) == 0);
}

TEST_CASE("Lem2c: three 2-neighbours of a 4-vertex must all be heavy") {
    TreeBuilder t;
    auto pendant_paths = [&](VertexId at, std::uint32_t count) {
        for (std::uint32_t i = 0; i < count; ++i) {
            auto mid = t.add();
            t.link(at, mid);
            t.grow(mid, 1);
        }
    };
    auto v = t.add(), x1 = t.add(), x2 = t.add(), x3 = t.add(), z = t.add();
    for (auto u : {x1, x2, x3, z})
        t.link(v, u);
    std::vector<VertexId> hubs;
    for (auto x : {x1, x2, x3}) {
        auto hub = t.add();
        t.link(x, hub);
        hubs.push_back(hub);
    }
    pendant_paths(hubs[0], 21); // degree 22
    pendant_paths(hubs[1], 21);
    pendant_paths(hubs[2], 20); // degree 21: x3 misses heaviness by one
    pendant_paths(z, 19);       // degree 20 keeps v heavy and non-light

    auto g = t.build();
    auto p = profile(g, 22);
    REQUIRE(p.vertices[x1].heavy);
    REQUIRE_FALSE(p.vertices[x3].heavy);
    auto r = check_reducible(g, 22);
    REQUIRE(count_rule(r, RuleId::Lem2c) == 1);
    auto it = std::find_if(r.findings.begin(), r.findings.end(),
                           [](const Finding& f) { return f.rule == RuleId::Lem2c; });
    CHECK(it->witnesses == std::vector<VertexId>{v, x3});

    // One more pendant path turns the last hub into a 22-vertex; no finding.
    pendant_paths(hubs[2], 1);
    CHECK(count_rule(check_reducible(t.build(), 22), RuleId::Lem2c) == 0);
}

TEST_CASE("Cor. 3 refinement is reported informationally when it applies") {
    // C12 with 0 and 2 boosted to degree 7 (weak-adjacent through 1) and 4
    // poor-making pendants; vertex 0's refinement hypothesis needs two
    // 7+-vertices weak-adjacent on the face.
    std::vector<std::vector<VertexId>> rot(12);
    for (VertexId i = 0; i < 12; ++i)
        rot[i] = {(i + 11) % 12, (i + 1) % 12};
    auto boost = [&](VertexId at, int legs) {
        for (int leg = 0; leg < legs; ++leg) {
            auto a = static_cast<VertexId>(rot.size());
            rot[at].push_back(a);
            rot.push_back({at, a + 1});
            rot.push_back({a});
        }
    };
    boost(0, 4); // degree 6: poor candidate
    boost(2, 5); // degree 7
    boost(10, 5); // degree 7
    auto g = RotationGraph::from_rotations(rot);
    auto faces = trace_faces(g);
    auto poor = poor_vertices(g, faces);
    auto notes = poor_cap_refinement_notes(g, faces, poor);
    REQUIRE(!notes.empty());
    CHECK(notes[0].find("poor vertex 0") != std::string::npos);
}

} // TEST_SUITE
