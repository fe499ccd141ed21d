#include <doctest.h>

#include "charge.hpp"
#include "corpus.hpp"
#include "faces.hpp"

using namespace p5g;

namespace {

ErrorCode read_fails(const std::string& text) {
    try {
        (void)read_p5g(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST_SUITE("corpus") {

TEST_CASE("cycle generator") {
    auto g = gen_cycle(5);
    CHECK(girth(g) == Girth::bounded(5));
    for (VertexId v = 0; v < 5; ++v)
        CHECK(g.degree(v) == 2);
    CHECK(girth(gen_cycle(3)) == Girth::bounded(3));
    CHECK_THROWS_AS((void)gen_cycle(2), Error);
}

TEST_CASE("spider generator") {
    auto star = gen_spider(22, 1);
    CHECK(star.vertex_count() == 23);
    CHECK(star.max_degree() == 22);
    CHECK(girth(star).unbounded);

    auto legs = gen_spider(5, 3);
    CHECK(legs.vertex_count() == 16);
    CHECK(legs.degree(0) == 5);
    CHECK(legs.edge_count() == 15);
    CHECK_THROWS_AS((void)gen_spider(0, 1), Error);
    CHECK_THROWS_AS((void)gen_spider(3, 0), Error);
}

TEST_CASE("dodecahedron fixture") {
    auto g = gen_dodecahedron();
    auto f = trace_faces(g);
    CHECK(g.vertex_count() == 20);
    CHECK(g.edge_count() == 30);
    CHECK(f.face_count() == 12);
    CHECK(validate_planar_embedding(g, f));
    auto charges = initial_charges(g, f);
    for (const auto& mu : charges.face_charge)
        CHECK(mu == Rational(0));
}

TEST_CASE("subdivided triangulations have girth at least 6") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = gen_subdivided_triangulation(5 + seed % 5, seed);
        auto f = trace_faces(g);
        CHECK(validate_planar_embedding(g, f));
        CHECK(girth(g).at_least(6));
    }
}

TEST_CASE("girth-5 generator guarantees embedding, girth and degree") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::uint32_t target = 8 + seed % 17;
        auto g = gen_girth5_random(5 + seed % 4, target, seed);
        auto f = trace_faces(g);
        CHECK(validate_planar_embedding(g, f));
        CHECK(girth(g).at_least(5));
        CHECK(g.max_degree() >= target);
    }
    CHECK_THROWS_AS((void)gen_girth5_random(4, 10, 1), Error);
}

TEST_CASE("same spec and seed reproduce the graph byte for byte") {
    auto a = write_p5g(gen_girth5_random(6, 20, 123));
    auto b = write_p5g(gen_girth5_random(6, 20, 123));
    auto c = write_p5g(gen_girth5_random(6, 20, 124));
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("p5g text round-trips") {
    for (const auto& g : {gen_dodecahedron(), gen_spider(6, 2), gen_girth5_random(5, 12, 9)}) {
        const auto text = write_p5g(g);
        const auto back = write_p5g(read_p5g(text));
        CHECK(text == back);
    }
    // read o write is identity including comments and blank lines.
    auto g = read_p5g("# fixture\np5g 3 2\n\nrot 1: 0 2\nrot 0: 1 # trailing comment\nrot 2: 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("p5g parse errors carry line numbers") {
    CHECK(read_fails("p5g 5 5\nrot 0: 1 4\nrot 1: 0 2\nrot 2: 1 3\nrot 3: 2 4\n") ==
          ErrorCode::ParseError); // missing rotation line
    CHECK(read_fails("p5g 1 1\nrot 0: 1 1\n") == ErrorCode::DanglingVertexId);
    CHECK(read_fails("p5g 2 1\nrot 0: 1 1\nrot 1: 0 0\n") == ErrorCode::ParallelEdge);
    CHECK(read_fails("graph 3 2\n") == ErrorCode::ParseError);
    CHECK(read_fails("p5g 2 2\nrot 0: 1\nrot 1: 0\n") == ErrorCode::ParseError); // edge count
    CHECK(read_fails("p5g 2 1\nrot 0: 1\nrot 0: 1\n") == ErrorCode::ParseError); // duplicate
    try {
        (void)read_p5g("p5g 2 1\nrot 0: 1\nrot 7: 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("gen specs parse, resolve and hash deterministically") {
    auto spec = GenSpec::parse("grafted n=6 delta=22 seed=7");
    CHECK(spec.family == "grafted");
    CHECK(spec.resolved(0).canonical() == "grafted n=6 delta=22 seed=7");

    auto defaulted = GenSpec::parse("grafted n=6 delta=22");
    CHECK(defaulted.resolved(9).canonical() == "grafted n=6 delta=22 seed=9");
    CHECK(GenSpec::parse("spider delta=22").resolved(0).canonical() == "spider delta=22 legs=1");

    CHECK(spec_hash(spec) == spec_hash(spec));
    CHECK(spec_hash(spec).size() == 16);
    CHECK(spec_hash(spec) != spec_hash(defaulted, 8));
    CHECK(spec_hash(defaulted, 7) == spec_hash(spec));

    CHECK_THROWS_AS((void)GenSpec::parse("moon n=4"), Error);
    CHECK_THROWS_AS((void)GenSpec::parse("cycle n=x"), Error);
    CHECK_THROWS_AS((void)GenSpec::parse("cycle size=4"), Error);
    CHECK_THROWS_AS((void)generate(GenSpec::parse("cycle")), Error); // missing n
}

TEST_CASE("generated graphs match their direct constructors") {
    CHECK(write_p5g(generate(GenSpec::parse("dodecahedron"))) == write_p5g(gen_dodecahedron()));
    CHECK(write_p5g(generate(GenSpec::parse("cycle n=9"))) == write_p5g(gen_cycle(9)));
    CHECK(write_p5g(generate(GenSpec::parse("spider delta=4 legs=2"))) ==
          write_p5g(gen_spider(4, 2)));
    CHECK(write_p5g(generate(GenSpec::parse("grafted n=6 delta=15"), 3)) ==
          write_p5g(gen_girth5_random(6, 15, 3)));
}

TEST_CASE("manifest parsing skips comments and reports bad lines") {
    auto specs = read_manifest("# corpus\ncycle n=5\n\nspider delta=22 legs=2 # tail\n");
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].family == "cycle");
    CHECK(specs[1].family == "spider");
    CHECK(read_manifest("# only comments\n").empty());
    try {
        (void)read_manifest("cycle n=5\nbogus n=1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

} // TEST_SUITE
