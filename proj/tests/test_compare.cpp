#include "bmq/compare.hpp"
#include "bmq/error.hpp"
#include "bmq/sweep.hpp"

#include "doctest.h"

#include <set>

using namespace bmq;

namespace {

BmObject obj(const char* bits) { return parse_object(bits); }

std::size_t image_of(const GammaComponent& gamma, const QuiverLabel& label) {
    for (const auto& [l, c] : gamma.witness)
        if (l == label)
            return c;
    FAIL("label not in witness");
    return 0;
}

} // namespace

TEST_CASE("gamma_object") {
    auto a = gamma_object(obj("00"));
    CHECK(image_of(a, QuiverLabel::one(1)) == 1);
    CHECK(image_of(a, QuiverLabel::two(1)) == 0);
    CHECK(a.assignment.size() == 2);

    auto b = gamma_object(obj("1"));
    CHECK(b.witness.empty());
    CHECK(b.g.class_count() == 0);

    auto m = gamma_object(obj("001"));
    CHECK(image_of(m, QuiverLabel::one(1)) == 1);
    CHECK(image_of(m, QuiverLabel::two(1)) == 0);
    CHECK(image_of(m, QuiverLabel::mid()) == 1);
}

TEST_CASE("gamma_object image is the whole fiber unless F is empty") {
    for (const auto& phi : enumerate_objects(8)) {
        auto gamma = gamma_object(phi);
        std::set<std::size_t> image(gamma.assignment.begin(), gamma.assignment.end());
        const bool covers = phi.ell() >= 1 || phi.beta() == 1;
        CHECK(image.size() == (covers ? static_cast<std::size_t>(phi.ell() + 1) : 0u));
        // the representatives x1(0..ell) land on 0..ell in order
        for (int i = 0; covers && i <= phi.ell(); ++i)
            CHECK(gamma_index(phi, QuiverLabel::one(i)) == i);
    }
}

TEST_CASE("gamma_chain on edges") {
    auto id = gamma_chain(BmChain::from_edge(BmEdge::identity(obj("00"))));
    CHECK(id.assignment == std::vector<std::size_t>{1, 0});

    auto cross = gamma_chain(BmChain::from_edge(parse_edge("phi=001;phiPrime=01;map=1,2")));
    REQUIRE(cross.f.class_count() == 2);
    // {x1(1), xm, ym} -> class of (0,1); {x2(1)} -> class of (0,0)
    CHECK(cross.assignment[0] == cross.g.classes.class_of({0, 1}));
    CHECK(cross.assignment[1] == cross.g.classes.class_of({0, 0}));
    CHECK(cross.well_defined());

    auto ones = gamma_chain(parse_chain("phi=11;phiPrime=1;map=1"));
    CHECK(ones.assignment.empty());
}

TEST_CASE("a wrong identification would be caught") {
    // x1(1) and x2(1) on the identity of 00 have different images
    auto g = g_chain(BmChain::from_edge(BmEdge::identity(obj("00"))));
    CHECK(g.vertex_maps[0][static_cast<std::size_t>(gamma_index(obj("00"), QuiverLabel::one(1)))] !=
          g.vertex_maps[0][static_cast<std::size_t>(gamma_index(obj("00"), QuiverLabel::two(1)))]);
}

TEST_CASE("gamma_index") {
    CHECK(gamma_index(obj("001"), QuiverLabel::one(0)) == 0);
    CHECK(gamma_index(obj("001"), QuiverLabel::two(2)) == 1);
    CHECK_THROWS_AS(gamma_index(obj("00"), QuiverLabel::mid()), Error);
    CHECK_THROWS_AS(gamma_index(obj("00"), QuiverLabel::one(2)), Error);
    CHECK_THROWS_AS(gamma_index(obj("00"), QuiverLabel::two(0)), Error);
}

TEST_CASE("verify_constancy") {
    auto id = verify_constancy(BmEdge::identity(obj("00")));
    CHECK(id.status == Status::Pass);
    CHECK(id.checks == 4); // two pairs and two identity chains
    auto cross = verify_constancy(parse_edge("phi=001;phiPrime=01;map=1,2"));
    CHECK(cross.status == Status::Pass);
    CHECK_FALSE(cross.evidence.empty());
    CHECK(cross.key == "phi=001;phiPrime=01;map=1,2");
}

TEST_CASE("verify_naturality") {
    CHECK(verify_naturality(BmChain(obj("0001"))).status == Status::Pass);
    CHECK(verify_naturality(BmChain::from_edge(BmEdge::identity(obj("01")))).status == Status::Pass);
    auto chain = parse_chain("phi=001;phiPrime=01;map=1,2|phi=01;phiPrime=001;map=0,0,1");
    auto r = verify_naturality(chain);
    CHECK(r.status == Status::Pass);
    CHECK(r.checks > 0);
}

TEST_CASE("verify_decomposition") {
    auto r = verify_decomposition(obj("001"));
    CHECK(r.status == Status::Pass);
    CHECK(r.evidence == std::vector<std::string>{"|F| = 3, |G| = 2"});
    auto ones = verify_decomposition(obj("11"));
    CHECK(ones.status == Status::Pass);
    CHECK(ones.evidence == std::vector<std::string>{"|F| = 0, |G| = 0"});
    CHECK_THROWS_AS(verify_decomposition(obj("0")), Error);
}

TEST_CASE("verify_identification and verify_cardinality") {
    CHECK(verify_identification(parse_edge("phi=001;phiPrime=01;map=1,2")).status == Status::Pass);
    CHECK(verify_cardinality(obj("0001")).status == Status::Pass);
    CHECK(verify_cardinality(obj("0")).status == Status::Pass);
}

TEST_CASE("xi_component") {
    auto t = xi_component(BmChain(obj("01")), 2);
    CHECK(t.g_size == 1);
    CHECK(t.f_size == 1);
    CHECK(t.domain == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(t.image == std::vector<std::vector<int>>{{0}, {1}});

    auto one = xi_component(BmChain::from_edge(parse_edge("phi=001;phiPrime=01;map=1,2")), 1);
    CHECK(one.domain.size() == 1);
    CHECK(one.image == std::vector<std::vector<int>>{{0, 0}});

    auto empty = xi_component(BmChain(obj("1")), 3);
    CHECK(empty.domain == std::vector<std::vector<int>>{{}});
    CHECK(empty.image == std::vector<std::vector<int>>{{}});

    CHECK(xi_component(BmChain(obj("00")), 0).domain.empty());
    CHECK(xi_component(BmChain(obj("0")), 0).domain.empty());
    CHECK(xi_component(BmChain(obj("1")), 0).domain.size() == 1);

    // |Map(G, X)| = m^|G|
    auto big = xi_component(BmChain(obj("0001")), 3);
    CHECK(big.domain.size() == 27);
    CHECK(big.f_size == 5);
}

TEST_CASE("xi is natural in the chain for small instances") {
    for (const auto& x : xi_instances(2, 3))
        CHECK(verify_xi_naturality(x.chain, x.m).status == Status::Pass);
}
