#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "faces.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using namespace p5g;

namespace {

RotationGraph from(std::vector<std::vector<VertexId>> rot) {
    return RotationGraph::from_rotations(std::move(rot));
}

std::vector<std::uint32_t> sorted_lengths(const FaceSet& f) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < f.face_count(); ++i)
        out.push_back(f.length(i));
    std::sort(out.begin(), out.end());
    return out;
}

RotationGraph k5() {
    std::vector<std::vector<VertexId>> rot(5);
    for (VertexId v = 0; v < 5; ++v)
        for (VertexId u = 0; u < 5; ++u)
            if (u != v)
                rot[v].push_back(u);
    return from(std::move(rot));
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("build validates a 5-cycle") {
    auto g = from({{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    for (VertexId v = 0; v < 5; ++v)
        CHECK(g.degree(v) == 2);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("build validates a path") {
    auto g = from({{1}, {0, 2}, {1}});
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("build rejects bad rotations") {
    auto thrown = [](std::vector<std::vector<VertexId>> rot) {
        try {
            (void)RotationGraph::from_rotations(std::move(rot));
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal; // nothing thrown
    };
    CHECK(thrown({{1, 2}, {0}}) == ErrorCode::DanglingVertexId);
    CHECK(thrown({{0}}) == ErrorCode::Loop);
    CHECK(thrown({{1, 1}, {0, 0}}) == ErrorCode::ParallelEdge);
    CHECK(thrown({{1}, {0, 2}, {}}) == ErrorCode::AsymmetricAdjacency);
    CHECK_THROWS_WITH_AS(from({{1, 2}, {0}}), doctest::Contains("neighbour 2"), Error);
}

TEST_CASE("face tracing on the 5-cycle") {
    auto g = gen_cycle(5);
    auto f = trace_faces(g);
    CHECK(f.face_count() == 2);
    CHECK(f.length(0) == 5);
    CHECK(f.length(1) == 5);
    CHECK(validate_planar_embedding(g, f));
}

TEST_CASE("a star's single boundary walk counts both bridge sides") {
    auto g = gen_spider(4, 1);
    auto f = trace_faces(g);
    REQUIRE(f.face_count() == 1);
    CHECK(f.length(0) == 8);
    CHECK(validate_planar_embedding(g, f)); // 5 - 4 + 1 == 2
}

TEST_CASE("dodecahedron embedding has 12 pentagonal faces") {
    auto g = gen_dodecahedron();
    auto f = trace_faces(g);
    REQUIRE(f.face_count() == 12);
    for (std::uint32_t i = 0; i < 12; ++i)
        CHECK(f.length(i) == 5);
    CHECK(validate_planar_embedding(g, f));
}

TEST_CASE("no rotation system embeds K5 in the plane") {
    auto g = k5();
    auto f = trace_faces(g);
    CHECK_FALSE(validate_planar_embedding(g, f));
}

TEST_CASE("euler check rejects disconnected input") {
    auto g = from({{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}});
    auto f = trace_faces(g);
    CHECK_THROWS_AS((void)validate_planar_embedding(g, f), Error);
}

TEST_CASE("face side count equals 2|E| on assorted graphs") {
    std::vector<RotationGraph> graphs;
    graphs.push_back(gen_cycle(7));
    graphs.push_back(gen_dodecahedron());
    graphs.push_back(gen_spider(9, 3));
    graphs.push_back(gen_girth5_random(6, 14, 11));
    graphs.push_back(gen_subdivided_triangulation(8, 3));
    for (const auto& g : graphs) {
        auto f = trace_faces(g);
        std::uint64_t sides = 0;
        for (std::uint32_t i = 0; i < f.face_count(); ++i)
            sides += f.length(i);
        CHECK(sides == 2 * g.edge_count());
    }
}

TEST_CASE("girth of cycles, forests, dodecahedron") {
    CHECK(girth(gen_cycle(5)) == Girth::bounded(5));
    CHECK(girth(gen_cycle(3)) == Girth::bounded(3));
    CHECK(girth(gen_spider(4, 1)).unbounded);
    CHECK(girth(gen_spider(4, 1)).at_least(5));
    CHECK(girth(gen_dodecahedron()) == Girth::bounded(5));
}

TEST_CASE("girth matches the edge-deletion oracle") {
    std::vector<RotationGraph> graphs;
    graphs.push_back(gen_dodecahedron());
    graphs.push_back(gen_cycle(9));
    graphs.push_back(k5());
    graphs.push_back(gen_subdivided_triangulation(7, 5));
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        graphs.push_back(gen_girth5_random(5, 9, seed));
    for (const auto& g : graphs)
        CHECK(girth(g) == oracles::girth_by_edge_deletion(g));
}

TEST_CASE("square of C5 is K5") {
    auto sq = square(gen_cycle(5));
    for (VertexId v = 0; v < 5; ++v)
        CHECK(sq.degree(v) == 4);
}

TEST_CASE("square of a path is a triangle") {
    auto sq = square(from({{1}, {0, 2}, {1}}));
    CHECK(sq.adjacent(0, 2));
    CHECK(sq.adjacent(0, 1));
    CHECK(sq.adjacent(1, 2));
}

TEST_CASE("square of C6 drops exactly the antipodal pairs") {
    auto g = gen_cycle(6);
    auto sq = square(g);
    auto dist = oracles::distance_matrix(g);
    for (VertexId u = 0; u < 6; ++u)
        for (VertexId v = u + 1; v < 6; ++v)
            CHECK(sq.adjacent(u, v) == (dist[u][v] <= 2));
    CHECK_FALSE(sq.adjacent(0, 3));
    CHECK_FALSE(sq.adjacent(1, 4));
    CHECK_FALSE(sq.adjacent(2, 5));
}

TEST_CASE("square degrees agree with pairwise BFS") {
    std::vector<RotationGraph> graphs;
    graphs.push_back(gen_girth5_random(8, 20, 3));
    graphs.push_back(gen_girth5_random(10, 60, 4)); // ~140 vertices
    graphs.push_back(gen_dodecahedron());
    graphs.push_back(gen_spider(12, 2));
    for (const auto& g : graphs) {
        auto sq = square(g);
        auto dist = oracles::distance_matrix(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::uint32_t within = 0;
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                within += u != v && dist[v][u] <= 2;
            CHECK(sq.degree(v) == within);
        }
    }
}

} // TEST_SUITE
