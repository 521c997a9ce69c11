#include "bmq/bm.hpp"
#include "bmq/error.hpp"

#include "doctest.h"

#include <map>

using namespace bmq;

namespace {

BmObject obj(const char* bits) { return parse_object(bits); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

} // namespace

TEST_CASE("fiber and crossing statistics") {
    CHECK(fiber_zero(obj("0011")) == 1);
    CHECK(fiber_zero(obj("1")) == -1);
    CHECK(fiber_zero(obj("000")) == 2);
    CHECK(crossing_count(obj("0011")) == 1);
    CHECK(crossing_count(obj("000")) == 0);
    CHECK(crossing_count(obj("01")) == 1);
}

TEST_CASE("named objects") {
    CHECK(named_object("a") == obj("00"));
    CHECK(named_object("b") == obj("11"));
    CHECK(named_object("m") == obj("01"));
    CHECK(named_object("\xF0\x9D\x94\xAA") == obj("01"));
    CHECK(kind_of([] { named_object("q"); }) == ErrorKind::Name);
}

TEST_CASE("objects validate") {
    CHECK(kind_of([] { BmObject({1, 0}); }) == ErrorKind::Validation);
    CHECK(kind_of([] { BmObject({0, 2}); }) == ErrorKind::Validation);
    CHECK(kind_of([] { parse_object("01x"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_object("10"); }) == ErrorKind::Validation);
}

TEST_CASE("enumerate_objects") {
    auto zero = enumerate_objects(0);
    REQUIRE(zero.size() == 2);
    CHECK(to_string(zero[0]) == "0");
    CHECK(to_string(zero[1]) == "1");
    auto one = enumerate_objects(1);
    REQUIRE(one.size() == 5);
    CHECK(to_string(one[2]) == "00");
    CHECK(to_string(one[3]) == "01");
    CHECK(to_string(one[4]) == "11");

    for (int k_max = 0; k_max <= 8; ++k_max) {
        int expected = 0;
        for (int k = 0; k <= k_max; ++k)
            expected += k + 2;
        CHECK(static_cast<int>(enumerate_objects(k_max).size()) == expected);
    }
    CHECK(enumerate_objects(8).size() == 54);
}

TEST_CASE("per-object invariants, k <= 8") {
    for (const auto& phi : enumerate_objects(8)) {
        CAPTURE(to_string(phi));
        const int k = phi.top(), ell = phi.ell();
        CHECK((phi.beta() == 1) == (-1 < ell && ell < k));
        CHECK(crossing_count(phi) == phi.beta());
        for (int i = 0; i <= k; ++i)
            CHECK((phi(i) == 0) == (i <= ell));
    }
}

TEST_CASE("enumerate_edges examples") {
    CHECK(enumerate_edges(obj("0"), obj("1")).empty());
    auto id = enumerate_edges(obj("01"), obj("01"));
    REQUIRE(id.size() == 1);
    CHECK(id[0].map() == DeltaMap::identity(1));
    auto two = enumerate_edges(obj("001"), obj("01"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].map() == DeltaMap(2, {0, 2}));
    CHECK(two[1].map() == DeltaMap(2, {1, 2}));
}

TEST_CASE("edges: filtered enumeration matches a direct count and respects fibers") {
    const auto objects = enumerate_objects(4);
    for (const auto& phi : objects)
        for (const auto& phi_prime : objects) {
            // direct count: maps [k']->[k] sending the zero block into {0..ell}
            // and the one block into {ell+1..k}
            long long expected = 0;
            for (const auto& m : enumerate_maps(phi_prime.top(), phi.top())) {
                bool ok = true;
                for (int i = 0; i <= phi_prime.top(); ++i)
                    ok = ok && ((i <= phi_prime.ell()) == (m(i) <= phi.ell()));
                expected += ok;
            }
            auto edges = enumerate_edges(phi, phi_prime);
            CHECK(static_cast<long long>(edges.size()) == expected);
            for (const auto& e : edges) {
                CHECK(e.phi_prime().beta() <= e.phi().beta());
                for (int i = 0; i <= phi_prime.ell(); ++i)
                    CHECK(e.map()(i) <= phi.ell());
            }
        }
}

TEST_CASE("edges validate") {
    CHECK(kind_of([] { BmEdge(obj("01"), obj("01"), DeltaMap(1, {0, 0})); }) == ErrorKind::Validation);
    CHECK(kind_of([] { BmEdge(obj("01"), obj("011"), DeltaMap(1, {0, 1})); }) == ErrorKind::Validation);
    CHECK(kind_of([] { parse_edge("phi=01;phiPrime=01"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge("phi=01;phiPrime=01;map=0,1;map=0,1"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge("phi=01;psi=01;map=0,1"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_edge("phi=01;phiPrime=01;map=1,0"); }) == ErrorKind::Validation);
}

TEST_CASE("segment_decompose") {
    auto seg = [](const char* bits) {
        std::vector<std::string> out;
        for (const auto& s : segment_decompose(obj(bits)))
            out.push_back(to_string(s));
        return out;
    };
    CHECK(seg("001") == std::vector<std::string>{"00", "01"});
    CHECK(seg("0011") == std::vector<std::string>{"00", "01", "11"});
    CHECK(seg("01") == std::vector<std::string>{"01"});
    CHECK(kind_of([] { segment_decompose(obj("0")); }) == ErrorKind::DegenerateDecomposition);

    for (const auto& phi : enumerate_objects(8)) {
        if (phi.top() < 1)
            continue;
        auto parts = segment_decompose(phi);
        REQUIRE(static_cast<int>(parts.size()) == phi.top());
        for (int i = 1; i <= phi.top(); ++i) {
            CHECK(parts[static_cast<std::size_t>(i - 1)](0) == phi(i - 1));
            CHECK(parts[static_cast<std::size_t>(i - 1)](1) == phi(i));
        }
    }
}

TEST_CASE("chains") {
    BmChain vertex(obj("0011"));
    CHECK(vertex.length() == 0);
    CHECK(to_string(vertex) == "0011");

    auto c = parse_chain("phi=00;phiPrime=00;map=0,1|phi=00;phiPrime=0;map=1");
    CHECK(c.length() == 2);
    CHECK(to_string(c.vertex(2)) == "0");
    CHECK(parse_chain(to_string(c)).length() == 2);
    CHECK(to_string(parse_chain(to_string(c))) == to_string(c));
    CHECK(kind_of([] { parse_chain("phi=00;phiPrime=00;map=0,1|phi=0;phiPrime=0;map=0"); }) == ErrorKind::Validation);
    CHECK(kind_of([&] { c.vertex(3); }) == ErrorKind::Range);
}

TEST_CASE("enumerate_chains counts paths in the edge graph") {
    const int k_max = 2;
    const auto objects = enumerate_objects(k_max);
    std::map<std::pair<std::string, std::string>, long long> edge_count;
    for (const auto& a : objects)
        for (const auto& b : objects)
            edge_count[{to_string(a), to_string(b)}] = static_cast<long long>(enumerate_edges(a, b).size());

    long long len1 = 0, len2 = 0;
    for (const auto& a : objects)
        for (const auto& b : objects) {
            len1 += edge_count[{to_string(a), to_string(b)}];
            for (const auto& c : objects)
                len2 += edge_count[{to_string(a), to_string(b)}] * edge_count[{to_string(b), to_string(c)}];
        }
    auto chains = enumerate_chains(2, k_max);
    long long n0 = 0, n1 = 0, n2 = 0;
    for (const auto& ch : chains)
        (ch.length() == 0 ? n0 : ch.length() == 1 ? n1 : n2)++;
    CHECK(n0 == static_cast<long long>(objects.size()));
    CHECK(n1 == len1);
    CHECK(n2 == len2);
}
