#include "bmq/error.hpp"
#include "bmq/simplex.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace bmq;

namespace {

// Every sequence in [0,k]^(k'+1), kept when non-decreasing.
std::vector<std::vector<int>> brute_force_maps(int k_prime, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> seq(static_cast<std::size_t>(k_prime) + 1, 0);
    while (true) {
        if (std::is_sorted(seq.begin(), seq.end()))
            out.push_back(seq);
        std::size_t pos = 0;
        while (pos < seq.size() && seq[pos] == k)
            seq[pos++] = 0;
        if (pos == seq.size())
            break;
        ++seq[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long binomial(int n, int r) {
    long long c = 1;
    for (int i = 1; i <= r; ++i)
        c = c * (n - r + i) / i;
    return c;
}

} // namespace

TEST_CASE("compose evaluates pointwise") {
    CHECK(compose(DeltaMap::identity(3), DeltaMap(3, {0, 2})) == DeltaMap(3, {0, 2}));
    CHECK(compose(DeltaMap(1, {0, 0, 1}), DeltaMap(2, {1, 2})) == DeltaMap(1, {0, 1}));
    CHECK(compose(DeltaMap(0, {0}), DeltaMap(0, {0, 0})) == DeltaMap(0, {0, 0}));
}

TEST_CASE("compose rejects mismatched shapes") {
    try {
        compose(DeltaMap(1, {0, 1}), DeltaMap(2, {0, 2}));
        FAIL("expected a composition error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Composition);
    }
}

TEST_CASE("DeltaMap validates its images") {
    CHECK_THROWS_AS(DeltaMap(1, {1, 0}), Error);
    CHECK_THROWS_AS(DeltaMap(1, {0, 2}), Error);
    CHECK_THROWS_AS(DeltaMap(1, {}), Error);
    CHECK_THROWS_AS(DeltaMap(-1, {0}), Error);
}

TEST_CASE("enumerate_maps small cases") {
    CHECK(enumerate_maps(0, 0) == std::vector<DeltaMap>{DeltaMap::identity(0)});
    CHECK(enumerate_maps(1, 1) == std::vector<DeltaMap>{DeltaMap(1, {0, 0}), DeltaMap(1, {0, 1}), DeltaMap(1, {1, 1})});
    CHECK(enumerate_maps(1, 2).size() == 6);
}

TEST_CASE("enumerate_maps agrees with brute force and the binomial count") {
    for (int k_prime = 0; k_prime <= 4; ++k_prime)
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(k_prime);
            CAPTURE(k);
            auto maps = enumerate_maps(k_prime, k);
            std::vector<std::vector<int>> images;
            for (const auto& m : maps) {
                CHECK(m.source_top() == k_prime);
                CHECK(m.target_top() == k);
                images.push_back(m.images());
            }
            // already lexicographic, so equal to the sorted brute-force list
            CHECK(images == brute_force_maps(k_prime, k));
            CHECK(static_cast<long long>(maps.size()) == binomial(k + k_prime + 1, k_prime + 1));
            CHECK(count_maps(k_prime, k) == binomial(k + k_prime + 1, k_prime + 1));
        }
}

TEST_CASE("composition is associative and unital up to k = 3") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d) {
                    auto fs = enumerate_maps(a, b);
                    auto gs = enumerate_maps(b, c);
                    auto hs = enumerate_maps(c, d);
                    for (const auto& f : fs)
                        for (const auto& g : gs)
                            for (const auto& h : hs)
                                REQUIRE(compose(h, compose(g, f)) == compose(compose(h, g), f));
                }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& f : enumerate_maps(a, b)) {
                CHECK(compose(DeltaMap::identity(b), f) == f);
                CHECK(compose(f, DeltaMap::identity(a)) == f);
            }
}

TEST_CASE("text form") {
    CHECK(to_string(DeltaMap(3, {0, 2, 2})) == "0,2,2");
    CHECK(parse_delta_map("0,2,2", 3) == DeltaMap(3, {0, 2, 2}));
    CHECK_THROWS_AS(parse_delta_map("0,,2", 3), Error);
    CHECK_THROWS_AS(parse_delta_map("0,x", 3), Error);
    CHECK_THROWS_AS(parse_delta_map("0,4", 3), Error);
    for (const auto& m : enumerate_maps(3, 3))
        CHECK(parse_delta_map(to_string(m), 3) == m);
}
