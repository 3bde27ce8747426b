#include <limits>

#include "doctest.h"
#include "dslice/poly.hpp"
#include "support/oracles.hpp"

using namespace dslice;

namespace {
IntPoly P(std::vector<std::int64_t> c) { return IntPoly::from_coefficients(std::move(c)); }
}  // namespace

TEST_CASE("construction trims leading zeros") {
    CHECK(P({1, 2, 0, 0}).degree() == 1);
    CHECK(P({0, 0}).is_zero());
    CHECK(IntPoly(0).is_zero());
    CHECK(IntPoly::x().degree() == 1);
    CHECK(P({3, 0, 5}).coefficient(2) == 5);
    CHECK(P({3, 0, 5}).coefficient(7) == 0);
    CHECK(P({3, -9, 5}).max_abs_coefficient() == 9);
}

TEST_CASE("arithmetic") {
    const IntPoly x = IntPoly::x();
    CHECK((x + IntPoly(1)) * (x - IntPoly(1)) == x * x - IntPoly(1));
    CHECK(-(x * x) == P({0, 0, -1}));
    CHECK((x * x - x).derivative() == P({-1, 2}));
    CHECK(IntPoly(7).derivative().is_zero());
    CHECK((x * x).compose(x + IntPoly(1)) == P({1, 2, 1}));
    CHECK((x * x - x).reflected() == x * x - x);
    CHECK(x.reflected() == IntPoly(1) - x);
}

TEST_CASE("string form") {
    CHECK(P({2, 0, -2, 1}).str() == "x^3 - 2x^2 + 2");
    CHECK(P({1, 1, 1, -1}).str() == "-x^3 + x^2 + x + 1");
    CHECK(P({0, -1, 1}).str() == "x^2 - x");
    CHECK(IntPoly(0).str() == "0");
    CHECK(IntPoly(-3).str() == "-3");
    CHECK(IntPoly::x().str() == "x");
}

TEST_CASE("evaluation agrees with naive power sums") {
    oracle::Gen gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> c;
        const int deg = static_cast<int>(gen.integer(0, 12));
        for (int k = 0; k <= deg; ++k) c.push_back(gen.integer(-50, 50));
        const IntPoly p = P(c);
        const std::complex<double> z = gen.in_box(2.0);
        std::complex<double> naive = 0.0;
        for (int k = 0; k <= deg; ++k) naive += static_cast<double>(c[static_cast<std::size_t>(k)]) * std::pow(z, k);
        CHECK(std::abs(p.evaluate(z) - naive) <= 1e-9 * std::max(1.0, std::abs(naive)));
    }
}

TEST_CASE("ring laws on random polynomials") {
    oracle::Gen gen(6);
    auto random_poly = [&] {
        std::vector<std::int64_t> c;
        const int deg = static_cast<int>(gen.integer(0, 6));
        for (int k = 0; k <= deg; ++k) c.push_back(gen.integer(-9, 9));
        return P(c);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        CHECK(a.reflected().reflected() == a);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("coefficient overflow is reported") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(IntPoly(big) + IntPoly(1), std::overflow_error);
    CHECK_THROWS_AS(IntPoly(big) * IntPoly(2), std::overflow_error);
}
