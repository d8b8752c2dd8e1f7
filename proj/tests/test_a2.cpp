#include <doctest.h>

#include <random>

#include "anvm/a2.hpp"
#include "anvm/bethe.hpp"
#include "anvm/dwpf.hpp"
#include "anvm/scalar_product.hpp"

using namespace anvm;

namespace {

std::vector<Scalar> distinct(std::mt19937_64& rng, int k, long lo, long hi, long maxden = 2) {
    std::uniform_int_distribution<long> den(1, maxden);
    std::vector<Scalar> v;
    while (static_cast<int>(v.size()) < k) {
        long d = den(rng);
        std::uniform_int_distribution<long> num(lo * d, hi * d);
        Scalar c(num(rng), d);
        bool dup = false;
        for (const auto& x : v) dup |= (x == c);
        if (!dup) v.push_back(c);
    }
    return v;
}

a2::Spec pinned_spec() {
    a2::Spec s;
    s.x1s = {Scalar(3)};
    s.x2s = {Scalar(4)};
    s.b1s = {Scalar(1, 2)};
    s.ys = {Scalar(0), Scalar(2)};
    s.zs = {Scalar(7)};
    return s;
}

}  // namespace

TEST_CASE("empty auxiliary structure freezes to 1") {
    a2::Spec s;
    s.ys = {Scalar(0), Scalar(2)};
    s.zs = {Scalar(7)};
    CHECK(a2::a2_scalar_product(s, a2::Layout::Fig1a).value == Scalar(1));
    CHECK(a2::a2_scalar_product(s, a2::Layout::Fig1b).value == Scalar(1));
}

TEST_CASE("l=1, m=0 reduces to an A1 scalar product lattice") {
    a2::Spec s;
    s.x1s = {Scalar(3)};
    s.b1s = {Scalar(4)};
    s.ys = {Scalar(0), Scalar(2)};
    sp::Spec a1{{Scalar(3)}, {Scalar(4)}, {Scalar(0), Scalar(2)}, {}, ModelParams::rational(1),
                Norm::UnitB};
    Scalar expect = sp::scalar_product(a1).value;
    CHECK(a2::a2_scalar_product(s, a2::Layout::Fig1a).value == expect);
    CHECK(a2::a2_scalar_product(s, a2::Layout::Fig1b).value == expect);
}

TEST_CASE("the two layouts agree on random desk-scale specs") {
    std::mt19937_64 rng(71);
    for (int l = 0; l <= 1; ++l)
        for (int m = 0; m <= 1; ++m)
            for (int L = 0; L <= 2; ++L)
                for (int M = 0; M <= 1; ++M) {
                    if (l + m > L + M) continue;
                    a2::Spec s;
                    s.x2s = distinct(rng, m, 60, 74);
                    s.x1s = distinct(rng, l, 40, 54);
                    s.b1s = distinct(rng, l, 80, 94);
                    s.b2s = distinct(rng, m, 100, 114);
                    s.ys = distinct(rng, L, 0, 12);
                    s.zs = distinct(rng, M, 20, 32);
                    Scalar va = a2::a2_scalar_product(s, a2::Layout::Fig1a).value;
                    Scalar vb = a2::a2_scalar_product(s, a2::Layout::Fig1b).value;
                    CHECK(va == vb);
                    Scalar vdp = a2::a2_scalar_product(s, a2::Layout::Fig1a, Method::FrontierDP).value;
                    CHECK(va == vdp);
                }
}

TEST_CASE("degenerations: signed sum equals sequential limit") {
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 5; ++rep) {
        a2::Spec s;
        s.x2s = distinct(rng, 1, 60, 74);
        s.x1s = distinct(rng, 1, 40, 54);
        s.b1s = distinct(rng, 1, 80, 94);
        s.b2s = distinct(rng, 1, 100, 114);
        s.ys = distinct(rng, 2, 0, 12);
        s.zs = distinct(rng, 1, 20, 32);
        auto d2 = a2::degenerate_b2(s);
        CHECK(d2.signed_sum == d2.sequential_limit);
        CHECK_NOTHROW(d2.value());
        auto d1 = a2::degenerate_b1(s);
        CHECK(d1.signed_sum == d1.sequential_limit);
    }
}

TEST_CASE("m=0 and l=0 degenerations return the undegenerated value") {
    a2::Spec s;
    s.x1s = {Scalar(3)};
    s.b1s = {Scalar(4)};
    s.ys = {Scalar(0), Scalar(2)};
    auto d = a2::degenerate_b2(s);  // m = 0
    CHECK(d.signed_sum == a2::a2_scalar_product(s, a2::Layout::Fig1a).value);
    a2::Spec t;
    t.x2s = {Scalar(9)};
    t.b2s = {Scalar(4)};
    t.zs = {Scalar(0)};
    auto d1 = a2::degenerate_b1(t);  // l = 0
    CHECK(d1.signed_sum == a2::a2_scalar_product(t, a2::Layout::Fig1b).value);
}

TEST_CASE("pinned factorization instance: fact1 = degeneration = -4/9") {
    a2::Spec s = pinned_spec();
    CHECK(a2::fund_slavnov_unit_b(s.x1s, s.b1s, s.ys) == Scalar(-2, 3));
    CHECK(a2::partial_det(s.x2s, s.x1s, s.zs) == Scalar(2, 3));
    CHECK(a2::fact1(s.x2s, s.x1s, s.b1s, s.ys, s.zs).value == Scalar(-4, 9));
    auto deg = a2::degenerate_b2(s);
    CHECK(deg.signed_sum == Scalar(-4, 9));
    CHECK(deg.sequential_limit == Scalar(-4, 9));
}

TEST_CASE("partial determinant special points") {
    // accidental cancellation at x2 = 5: both kernel terms equal 3/2
    CHECK(a2::partial_det({Scalar(5)}, {Scalar(3)}, {Scalar(7)}).is_zero());
    {
        // the degenerate signed-sum lattice must also vanish there (b1 on shell)
        a2::Spec s = pinned_spec();
        s.x2s = {Scalar(5)};
        auto deg = a2::degenerate_b2(s);
        CHECK(deg.signed_sum.is_zero());
        CHECK(deg.sequential_limit.is_zero());
    }
    // partial-2 with m = 0 reduces to the plain partial-DWPF determinant
    CHECK(a2::partial_det({Scalar(3)}, {Scalar(0), Scalar(1)}, {}) == Scalar(1));
    CHECK(a2::partial_det({Scalar(3)}, {Scalar(0), Scalar(1)}, {}) ==
          dwpf::pdwpf_det({Scalar(3)}, {Scalar(0), Scalar(1)}).value);
}

TEST_CASE("fact2 with an on-shell anti-fundamental root") {
    a2::Spec s;
    s.x1s = {Scalar(3)};
    s.x2s = {Scalar(12)};
    s.b2s = {Scalar(7)};  // on-shell for z = {5, 8}
    s.ys = {Scalar(0), Scalar(2)};
    s.zs = {Scalar(5), Scalar(8)};
    CHECK(a2::antifund_slavnov(s.x2s, s.b2s, s.zs) == Scalar(-1, 14));
    CHECK(a2::partial_det(s.x1s, s.ys, s.x2s) == Scalar(14, 9));
    CHECK(a2::fact2(s.x2s, s.x1s, s.b2s, s.ys, s.zs).value == Scalar(-1, 9));
    auto deg = a2::degenerate_b1(s);
    CHECK(deg.signed_sum == Scalar(-1, 9));
    CHECK(deg.sequential_limit == Scalar(-1, 9));
}

TEST_CASE("factorization at an irrational on-shell root stays within 2^-150") {
    // y = {0,2,5}, N = 1: cleared Bethe polynomial 3b^2 - 11b + 4, both
    // roots irrational and admissible
    std::vector<Scalar> ys{Scalar(0), Scalar(2), Scalar(5)};
    auto sys = bethe::solve(bethe::Variant::A1Fundamental, ys, {}, 1);
    REQUIRE(sys.solutions.size() == 2);
    for (const auto& sol : sys.solutions) {
        REQUIRE(!sol.exact);
        a2::Spec s;
        s.x1s = {Scalar(8)};
        s.x2s = {Scalar(10)};
        s.b1s = sol.roots1;
        s.ys = ys;
        s.zs = {Scalar(12)};
        Scalar f1 = a2::fact1(s.x2s, s.x1s, s.b1s, s.ys, s.zs).value;
        auto deg = a2::degenerate_b2(s);
        BigFloat tol = BigFloat::pow2(-150, 256);
        CHECK((deg.signed_sum - deg.sequential_limit).abs().to_float(256) < tol);
        CHECK((deg.signed_sum - f1).abs().to_float(256) < tol);
        // on-shell A1 equivalence at the same root
        sp::Spec a1{s.x1s, s.b1s, ys, {}, ModelParams::rational(1), Norm::UnitA};
        Scalar slav = sp::slavnov(s.x1s, s.b1s, ys).value;
        Scalar enums = sp::scalar_product(a1).value;
        CHECK((slav - enums).abs().to_float(256) < tol);
    }
}

TEST_CASE("remaining-factor consistency: partial dets are limits of mixed scalar products") {
    std::mt19937_64 rng(79);
    auto x2s = distinct(rng, 1, 60, 74);
    auto x1s = distinct(rng, 1, 40, 54);
    auto zs = distinct(rng, 1, 20, 32);
    auto ys = distinct(rng, 2, 0, 12);
    {
        std::vector<Scalar> roots = x1s;
        roots.insert(roots.end(), zs.begin(), zs.end());
        auto f = [&](const std::vector<Scalar>& b2s) {
            return evaluate(a2::build_mixed_sp_x1z(x2s, b2s, x1s, zs), Method::Enumeration).value;
        };
        CHECK(a2::sequential_limit(f, {roots}) == a2::partial_det(x2s, x1s, zs));
    }
    {
        std::vector<Scalar> roots = ys;
        roots.insert(roots.end(), x2s.begin(), x2s.end());
        auto f = [&](const std::vector<Scalar>& b1s) {
            return evaluate(a2::build_mixed_sp_yx2(x1s, b1s, ys, x2s), Method::Enumeration).value;
        };
        CHECK(a2::sequential_limit(f, {roots}) == a2::partial_det(x1s, ys, x2s));
    }
}

TEST_CASE("lemma 5: fixed-colour decomposition carries the right sign") {
    std::mt19937_64 rng(83);
    auto x1s = distinct(rng, 1, 40, 54);
    auto b1s = distinct(rng, 1, 80, 94);
    auto ys = distinct(rng, 2, 0, 12);
    auto zs = distinct(rng, 1, 20, 32);
    sp::Spec a1{x1s, b1s, ys, {}, ModelParams::rational(1), Norm::UnitB};
    Scalar base = sp::scalar_product(a1).value;
    // admissible assignments with #(i=2)+#(j=1) = m = 1
    Scalar v21 = evaluate(a2::build_colour_fixed_b2(x1s, b1s, ys, zs, {2}, {2}),
                          Method::Enumeration)
                     .value;
    CHECK(v21 == base);
    Scalar v12 = evaluate(a2::build_colour_fixed_b2(x1s, b1s, ys, zs, {1}, {1}),
                          Method::Enumeration)
                     .value;
    CHECK(v12 == -base);
}

TEST_CASE("lemma 7: fixed-colour decomposition carries the right sign") {
    std::mt19937_64 rng(89);
    auto x2s = distinct(rng, 1, 60, 74);
    auto b2s = distinct(rng, 1, 100, 114);
    auto ys = distinct(rng, 2, 0, 12);
    auto zs = distinct(rng, 1, 20, 32);
    Scalar base = evaluate(a2::build_antifund_sp(x2s, b2s, zs), Method::Enumeration).value;
    // #(i=0) + #(j=1) = l = 1
    Scalar a = evaluate(a2::build_colour_fixed_b1(x2s, b2s, ys, zs, {0, 0}, {0}),
                        Method::Enumeration)
                   .value;
    CHECK(a == -base);
    Scalar b = evaluate(a2::build_colour_fixed_b1(x2s, b2s, ys, zs, {1, 0}, {1}),
                        Method::Enumeration)
                   .value;
    CHECK(b == base);
    Scalar c = evaluate(a2::build_colour_fixed_b1(x2s, b2s, ys, zs, {0, 1}, {1}),
                        Method::Enumeration)
                   .value;
    CHECK(c == base);
}

TEST_CASE("spec validation") {
    a2::Spec s;
    s.x1s = {Scalar(1), Scalar(2)};
    s.b1s = {Scalar(5), Scalar(6)};
    s.ys = {Scalar(0)};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // l + m > L + M
}
