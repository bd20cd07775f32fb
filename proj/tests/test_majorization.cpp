#include <doctest.h>

#include <cmath>
#include <limits>

#include "framecomp/majorization.hpp"
#include "test_helpers.hpp"

using namespace framecomp;
using testutil::Rng;

TEST_CASE("sorting rearrangements") {
    CHECK(sort_desc(RealVec{1, 3, 2}) == RealVec{3, 2, 1});
    CHECK(sort_asc(RealVec{1, 3, 2}) == RealVec{1, 2, 3});
    CHECK(sort_desc(RealVec{5, 5, 5}) == RealVec{5, 5, 5});
    // idempotent
    const RealVec once = sort_desc(RealVec{4, -1, 7, 0});
    CHECK(sort_desc(once) == once);
}

TEST_CASE("RealVec construction rejects bad input") {
    CHECK_THROWS_AS(RealVec(std::vector<double>{}), validation_error);
    CHECK_THROWS_AS((RealVec{1.0, std::nan("")}), validation_error);
    CHECK_THROWS_AS((RealVec{1.0, std::numeric_limits<double>::infinity()}), validation_error);
}

TEST_CASE("trace") {
    CHECK(trace(RealVec{1, 2, 3}) == doctest::Approx(6.0));
    CHECK(trace(RealVec{0, 0}) == doctest::Approx(0.0));
    CHECK(trace(RealVec{2.5, -2.5}) == doctest::Approx(0.0));
}

TEST_CASE("submajorization examples") {
    CHECK(submajorizes(RealVec{1, 1}, RealVec{2, 0}));
    CHECK_FALSE(submajorizes(RealVec{3, 1}, RealVec{2, 2}));
    const RealVec x{0.3, 1.7, -0.4};
    CHECK(submajorizes(x, x));
}

TEST_CASE("majorization examples") {
    CHECK(majorizes(RealVec{1, 1}, RealVec{2, 0}));
    CHECK_FALSE(majorizes(RealVec{1, 1}, RealVec{2, 1}));  // traces differ
    CHECK(majorizes(RealVec{2, 2}, RealVec{3, 1}));
    CHECK_FALSE(majorizes(RealVec{3, 1}, RealVec{2, 2}));
    // different lengths are compared after zero padding
    CHECK(majorizes(RealVec{1, 1}, RealVec{2, 0, 0, 0}));
    CHECK(majorizes(RealVec{1, 1, 0, 0}, RealVec{2, 0}));
}

TEST_CASE("strict majorization examples") {
    CHECK(strictly_majorizes(RealVec{1, 1}, RealVec{2, 0}));
    CHECK_FALSE(strictly_majorizes(RealVec{2, 0}, RealVec{0, 2}));  // permutations
    const RealVec x{1.25, 0.5};
    CHECK_FALSE(strictly_majorizes(x, x));
}

TEST_CASE("entrywise comparison") {
    CHECK(entrywise_leq(RealVec{1, 2}, RealVec{1, 3}));
    CHECK_FALSE(entrywise_leq(RealVec{1, 4}, RealVec{2, 3}));
    CHECK(entrywise_leq(RealVec{0, 0}, RealVec{3, 1}));
    CHECK_THROWS_AS(entrywise_leq(RealVec{1}, RealVec{1, 2}), validation_error);
}

TEST_CASE("entrywise dominance implies submajorization") {
    Rng rng(101);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 1 + rep % 7;
        std::vector<double> y(n), x(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = u(rng);
            x[i] = y[i] - u(rng) * 0.5;
        }
        REQUIRE(entrywise_leq(RealVec(x), RealVec(y)));
        CHECK(submajorizes(RealVec(x), RealVec(y)));
    }
}

TEST_CASE("majorization is exactly the convex trace order") {
    Rng rng(202);
    const std::function<double(double)> fns[] = {
        [](double t) { return t * t; },
        [](double t) { return t * t * t * t; },
        [](double t) { return std::exp(t); },
    };
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 2 + rep % 5;  // lengths <= 6
        auto [x, y] = testutil::random_majorized_pair(rng, n);
        REQUIRE(majorizes(RealVec(x), RealVec(y)));
        for (const auto& f : fns) {
            double sx = 0.0, sy = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                sx += f(x[i]);
                sy += f(y[i]);
            }
            CHECK(sx <= sy + 1e-9);
        }
    }
}

TEST_CASE("strict majorization gives strict convex inequality") {
    Rng rng(303);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 2 + rep % 5;
        auto [x, y] = testutil::random_majorized_pair(rng, n);
        if (!strictly_majorizes(RealVec(x), RealVec(y), 1e-12)) continue;
        double sx = 0.0, sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += x[i] * x[i];
            sy += y[i] * y[i];
        }
        CHECK(sx < sy);
    }
}

TEST_CASE("majorization of concatenated blocks") {
    Rng rng(404);
    for (int rep = 0; rep < 200; ++rep) {
        auto [x1, y1] = testutil::random_majorized_pair(rng, 2 + rep % 3);
        auto [x2, y2] = testutil::random_majorized_pair(rng, 1 + rep % 4);
        std::vector<double> x = x1, y = y1;
        x.insert(x.end(), x2.begin(), x2.end());
        y.insert(y.end(), y2.begin(), y2.end());
        CHECK(majorizes(RealVec(x), RealVec(y)));
    }
}
