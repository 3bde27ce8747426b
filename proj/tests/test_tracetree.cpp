#include "doctest.h"
#include "dslice/pleating.hpp"
#include "dslice/tracetree.hpp"
#include "support/oracles.hpp"

using namespace dslice;

TEST_CASE("mu_invariant values") {
    CHECK(mu_invariant(0.0, 0.0, 0.0) == cplx(0.0));
    CHECK(std::abs(mu_invariant(2.5, 2.5, 2.5) - 3.125) < 1e-15);
    oracle::Gen gen(21);
    for (int k = 0; k < 50; ++k) {
        const cplx x = gen.in_box(5.0);
        const cplx mu = mu_invariant(std::sqrt(2.0 - x), 0.0, std::sqrt(x + 1.0));
        CHECK(std::abs(mu - 3.0) < 1e-12);
    }
}

TEST_CASE("cross_edge examples") {
    const auto root = base_vertex(cplx(3.0), cplx(3.0), cplx(3.0));
    const auto v = cross_edge(root, 2, MoveRule::Markoff);
    CHECK(v.values[2] == cplx(6.0));
    CHECK(v.regions[2] == Rational(-1, 1));
    CHECK(v.values[0] == cplx(3.0));
    CHECK(v.values[1] == cplx(3.0));

    const auto zero = base_vertex(cplx(0.0), cplx(0.0), cplx(5.0));
    CHECK(cross_edge(zero, 2, MoveRule::Markoff).values[2] == cplx(-5.0));

    const IntPoly x = IntPoly::x();
    const auto s = base_vertex(x, IntPoly(2), IntPoly(1) - x);
    const auto s1 = cross_edge(s, 1, MoveRule::STree);
    CHECK(s1.regions[1] == Rational(1, 2));
    CHECK(s1.values[1] == x * x - x);
    CHECK_THROWS_AS(cross_edge(s, 3, MoveRule::STree), std::out_of_range);
}

TEST_CASE("crossing an edge twice is the identity") {
    oracle::Gen gen(22);
    const IntPoly x = IntPoly::x();
    auto poly_vertex = base_vertex(x, IntPoly(2), IntPoly(1) - x);
    for (int step = 0; step < 12; ++step) {
        const auto e = static_cast<std::size_t>(gen.integer(0, 2));
        for (MoveRule rule : {MoveRule::Markoff, MoveRule::STree}) {
            const auto there = cross_edge(poly_vertex, e, rule);
            const auto back = cross_edge(there, e, rule);
            CHECK(back.values == poly_vertex.values);
            CHECK(back.regions == poly_vertex.regions);
        }
        poly_vertex = cross_edge(poly_vertex, e, MoveRule::STree);
    }
}

TEST_CASE("mu is conserved along random Markoff walks") {
    oracle::Gen gen(23);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto v = base_vertex(gen.in_box(1.5), gen.in_box(1.5), gen.in_box(1.5));
        const cplx mu = mu_invariant(v.values[0], v.values[1], v.values[2]);
        // Rounding at the largest values met persists after the walk comes back down.
        double peak = 1.0;
        for (int step = 0; step < 20; ++step) {
            v = cross_edge(v, static_cast<std::size_t>(gen.integer(0, 2)), MoveRule::Markoff);
            const cplx m = mu_invariant(v.values[0], v.values[1], v.values[2]);
            const auto& [a, b, c] = v.values;
            if (std::abs(a) + std::abs(b) + std::abs(c) > 1e30) break;
            peak = std::max(peak, std::norm(a) + std::norm(b) + std::norm(c) + std::abs(a * b * c));
            worst = std::max(worst, std::abs(m - mu) / peak);
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("S-tree residual vanishes along random walks") {
    oracle::Gen gen(24);
    for (int trial = 0; trial < 100; ++trial) {
        const cplx x = gen.in_box(1.5);
        auto v = base_vertex(x, cplx(2.0), 1.0 - x);
        double peak = 1.0;
        for (int step = 0; step < 15; ++step) {
            v = cross_edge(v, static_cast<std::size_t>(gen.integer(0, 2)), MoveRule::STree);
            const auto& [a, b, c] = v.values;
            if (std::abs(a) + std::abs(b) + std::abs(c) > 1e30) break;
            peak = std::max(peak, std::norm(a) + std::norm(b) + std::norm(c) + std::abs(a * b * c));
            CHECK(std::abs(stree_residual(a, b, c)) / peak < 1e-9);
        }
    }
}

TEST_CASE("label_at examples") {
    const cplx x{0.3, -1.2};
    CHECK(label_at(Rational(1, 1), base_vertex(x, x, x), MoveRule::Markoff) == x);
    CHECK(trace_polynomial(Rational(1, 2)).str() == "x^2 - x");
    CHECK(trace_polynomial(Rational(1, 3)).str() == "-x^3 + x^2 + x + 1");
    CHECK(trace_polynomial(Rational(0, 1)).str() == "x");
    CHECK(trace_polynomial(Rational::infinity()).str() == "2");
    const auto off_base = cross_edge(base_vertex(x, x, x), 0, MoveRule::Markoff);
    CHECK_THROWS_AS(label_at(Rational(1, 2), off_base, MoveRule::Markoff), std::invalid_argument);
}

TEST_CASE("label_at agrees with an exhaustive tree traversal") {
    oracle::Gen gen(25);
    for (auto rule : {oracle::Rule::Markoff, oracle::Rule::STree}) {
        for (int trial = 0; trial < 5; ++trial) {
            const std::array<cplx, 3> root{gen.in_box(1.2), gen.in_box(1.2), gen.in_box(1.2)};
            const auto map = oracle::enumerate_regions(root, rule, 9);
            CHECK(map.inconsistency < 1e-9);
            const MoveRule r = rule == oracle::Rule::Markoff ? MoveRule::Markoff : MoveRule::STree;
            const auto vertex = base_vertex(root[0], root[1], root[2]);
            for (const auto& [f, value] : map.values) {
                const cplx got = label_at(Rational(f.p, f.q), vertex, r);
                CHECK(std::abs(got - value) <= 1e-9 * std::max(1.0, std::abs(value)));
            }
        }
    }
}

TEST_CASE("polynomial and numeric label_at agree for q <= 12") {
    oracle::Gen gen(26);
    for (const Rational& r : canonical_classes_up_to(12)) {
        const IntPoly f = trace_polynomial(r);
        for (int k = 0; k < 3; ++k) {
            const cplx x0 = gen.in_box(1.3);
            const cplx numeric = label_at(r, base_vertex(x0, cplx(2.0), 1.0 - x0), MoveRule::STree);
            CHECK(std::abs(f.evaluate(x0) - numeric) <= 1e-9 * std::max(1.0, std::abs(numeric)));
        }
    }
}

TEST_CASE("boundary values round a region") {
    const cplx a{1.3, 0.2}, c{-0.4, 2.0};
    BoundaryValues<cplx> period(0.0, a, c, MoveRule::Markoff);
    CHECK(period[2] == -a);
    CHECK(period[3] == -c);
    CHECK(period[4] == a);
    CHECK(period[-1] == -c);
    CHECK(period[-2] == -a);

    BoundaryValues<cplx> grow(3.0, 3.0, 6.0, MoveRule::Markoff);
    CHECK(grow[2] == cplx(15.0));

    BoundaryValues<cplx> escape(2.5, 1.0, 1.0, MoveRule::Markoff);
    CHECK(std::abs(escape[30]) > 1e5);
    CHECK(std::abs(escape[-30]) > 1e5);

    // The S-tree recursion matches the labels round the 1/0 region.
    const IntPoly x = IntPoly::x();
    BoundaryValues<IntPoly> s(IntPoly(2), x, IntPoly(1) - x, MoveRule::STree);
    CHECK(s[2] == trace_polynomial(Rational(2, 1)));
    CHECK(s[-1] == trace_polynomial(Rational(-1, 1)));
}
