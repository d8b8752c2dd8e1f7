#include <doctest.h>

#include "anvm/bethe.hpp"

using namespace anvm;
using namespace anvm::bethe;

TEST_CASE("cleared residuals at fixed points") {
    // y = {0,2}, N = 1: cleared form is 2b - 1
    auto r = residual(Variant::A1Fundamental, {Scalar(0), Scalar(2)}, {}, {Scalar(1, 2)});
    CHECK(r.size() == 1);
    CHECK(r[0].is_zero());
    r = residual(Variant::A1Fundamental, {Scalar(0), Scalar(2)}, {}, {Scalar(0)});
    CHECK(r[0] == Scalar(-1));
}

TEST_CASE("N=1 fundamental closed forms") {
    auto sys = solve(Variant::A1Fundamental, {Scalar(0), Scalar(2)}, {}, 1);
    REQUIRE(sys.solutions.size() == 1);
    CHECK(sys.solutions[0].roots1[0] == Scalar(1, 2));
    CHECK(sys.solutions[0].exact);
    CHECK(sys.solutions[0].residuals[0].is_zero());
    // y = {0,1}: the cleared equation degenerates to a nonzero constant
    auto none = solve(Variant::A1Fundamental, {Scalar(0), Scalar(1)}, {}, 1);
    CHECK(none.no_finite_solution);
    CHECK(none.solutions.empty());
}

TEST_CASE("N=1 fundamental over four sites finds all admissible roots") {
    // cleared form for y = {0,1,2,5}: b(b-1)(4b-14), whose only admissible
    // root (0 and 1 collide with inhomogeneities) is 7/2
    std::vector<Scalar> ys{Scalar(0), Scalar(1), Scalar(2), Scalar(5)};
    auto sys = solve(Variant::A1Fundamental, ys, {}, 1);
    REQUIRE(sys.solutions.size() == 1);
    CHECK(sys.solutions[0].roots1[0] == Scalar(7, 2));
    CHECK(sys.solutions[0].exact);
}

TEST_CASE("N=1 solver is complete against a sign-scan oracle") {
    std::vector<Scalar> ys{Scalar(0), Scalar(2), Scalar(9, 2), Scalar(8)};
    auto sys = solve(Variant::A1Fundamental, ys, {}, 1);
    // oracle: the cleared polynomial P(b) = Π(b-y+1) - Π(b-y); scan a fine
    // grid for sign changes and demand the solver accounts for each bracket
    auto P = [&](const Scalar& b) {
        Scalar lhs(1), rhs(1);
        for (const auto& y : ys) {
            lhs *= b - y + Scalar(1);
            rhs *= b - y;
        }
        return lhs - rhs;
    };
    auto accounted = [&](const Scalar& lo, const Scalar& hi) {
        for (const auto& s : sys.solutions) {
            const Scalar& r = s.roots1[0];
            if (!(r < lo) && !(hi < r)) return true;
        }
        for (const auto& y : ys)  // inadmissible root positions
            if (!(y < lo) && !(hi < y)) return true;
        return false;
    };
    Scalar step(1, 8);
    Scalar prev = P(Scalar(-20));
    for (Scalar b = Scalar(-20) + step; b < Scalar(20); b += step) {
        Scalar cur = P(b);
        if (!cur.is_zero() && !prev.is_zero() && cur.sign() != prev.sign())
            CHECK(accounted(b - step, b));
        prev = cur;
    }
}

TEST_CASE("anti-fundamental systems") {
    // M = 1: no finite root (cleared form is the constant -1 up to sign)
    auto none = solve(Variant::A1AntiFundamental, {}, {Scalar(3)}, 1);
    CHECK(none.no_finite_solution);
    // M = 2: b = (z1 + z2 + 1)/2
    auto sys = solve(Variant::A1AntiFundamental, {}, {Scalar(5), Scalar(8)}, 1);
    REQUIRE(sys.solutions.size() == 1);
    CHECK(sys.solutions[0].roots1[0] == Scalar(7));
    CHECK(sys.solutions[0].exact);
}

TEST_CASE("N=2 system with irrational roots") {
    std::vector<Scalar> ys{Scalar(0), Scalar(3), Scalar(5), Scalar(7)};
    SolveConfig cfg;
    cfg.seed = 2024;
    cfg.restarts = 400;
    auto sys = solve(Variant::A1Fundamental, ys, {}, 2, 0, cfg);
    REQUIRE(!sys.solutions.empty());
    bool found_irrational = false;
    for (const auto& s : sys.solutions) {
        for (const auto& r : s.residuals)
            CHECK(r.abs().to_float(256) < BigFloat::pow2(-150, 256));
        found_irrational |= !s.exact;
    }
    CHECK(found_irrational);
}

TEST_CASE("solver is deterministic for a fixed seed") {
    std::vector<Scalar> ys{Scalar(0), Scalar(3), Scalar(5), Scalar(7)};
    SolveConfig cfg;
    cfg.seed = 99;
    cfg.restarts = 150;
    auto a = solve(Variant::A1Fundamental, ys, {}, 2, 0, cfg);
    auto b = solve(Variant::A1Fundamental, ys, {}, 2, 0, cfg);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (size_t i = 0; i < a.solutions.size(); ++i)
        for (size_t j = 0; j < a.solutions[i].roots1.size(); ++j)
            CHECK(a.solutions[i].roots1[j] == b.solutions[i].roots1[j]);
}

TEST_CASE("nested residuals degenerate into A1 residuals as b2 grows") {
    std::vector<Scalar> ys{Scalar(0), Scalar(2)}, zs{Scalar(7)};
    std::vector<Scalar> b1{Scalar(1, 2)};
    Scalar a1 = residual(Variant::A1Fundamental, ys, {}, b1)[0];
    Scalar prev_gap(0);
    bool first = true;
    for (long t : {1000L, 1000000L}) {
        // rescale the b1-family equation by the leading power of (-t)
        auto r = residual(Variant::A2Nested, ys, zs, b1, {Scalar(t)});
        Scalar rescaled = r[0] / Scalar(-t);
        Scalar gap = (rescaled - a1).abs();
        if (!first) CHECK(gap < prev_gap);
        first = false;
        prev_gap = gap;
    }
    CHECK(prev_gap < Scalar(1, 100000));
}

TEST_CASE("count preconditions") {
    CHECK_THROWS_AS(solve(Variant::A1Fundamental, {Scalar(0)}, {}, -1), std::invalid_argument);
    CHECK_THROWS_AS(solve(Variant::A2Nested, {Scalar(0)}, {}, 2, 1), std::invalid_argument);
}
