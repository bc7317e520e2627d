// Universal-set construction tests: exhaustive coverage verification on a
// grid of (n, i), plus argument validation.

#include <catch2/catch_amalgamated.hpp>

#include "iib/universal_set.hpp"

using namespace iib;

TEST_CASE("small n uses the full cube and is trivially universal", "[universal]") {
    for (int n = 1; n <= 8; ++n) {
        for (int i = 0; i <= std::min(n, 4); ++i) {
            const UniversalSet us = build_universal_set(n, i);
            CAPTURE(n, i);
            CHECK(us.n == n);
            CHECK(us.i == i);
            CHECK(is_universal(us));
        }
    }
}

TEST_CASE("greedy construction for larger n is verified universal", "[universal]") {
    for (int n : {15, 16, 18}) {
        for (int i : {1, 2, 3}) {
            const UniversalSet us = build_universal_set(n, i);
            CAPTURE(n, i);
            CHECK(is_universal(us));
            // The point of the greedy cover is to beat the full cube.
            CHECK(us.vectors.size() < (1ull << n));
        }
    }
}

TEST_CASE("deterministic: same (n, i) yields the same family", "[universal]") {
    const UniversalSet a = build_universal_set(16, 3);
    const UniversalSet b = build_universal_set(16, 3);
    CHECK(a.vectors == b.vectors);
}

TEST_CASE("coverage checker catches a deliberate gap", "[universal]") {
    UniversalSet us = build_universal_set(5, 2);
    REQUIRE(is_universal(us));
    // Remove every vector whose first two coordinates are (1, 1): the
    // pattern 11 on positions {0, 1} is now uncovered.
    std::erase_if(us.vectors,
                  [](const std::vector<uint8_t>& v) { return v[0] == 1 && v[1] == 1; });
    CHECK_FALSE(is_universal(us));
}

TEST_CASE("argument validation", "[universal]") {
    CHECK_THROWS_AS(build_universal_set(4, -1), std::invalid_argument);
    CHECK_THROWS_AS(build_universal_set(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_universal_set(-1, 0), std::invalid_argument);
}

TEST_CASE("i equal to n degenerates to the full cube", "[universal]") {
    const UniversalSet us = build_universal_set(4, 4);
    CHECK(us.vectors.size() == 16);
    CHECK(is_universal(us));
}
