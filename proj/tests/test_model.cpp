#include <doctest.h>

#include "anvm/model.hpp"

using namespace anvm;

TEST_CASE("rational weights, both normalizations") {
    WeightTable ua(ModelParams::rational(1), Norm::UnitA);
    CHECK(ua.weight(WeightKind::CPlus, Scalar(1), Scalar(0)) == Scalar(1, 2));
    CHECK(ua.weight(WeightKind::BPlus, Scalar(3), Scalar(3)).is_zero());
    CHECK(ua.weight(WeightKind::A, Scalar(9), Scalar(2)) == Scalar(1));
    WeightTable ub(ModelParams::rational(1), Norm::UnitB);
    CHECK(ub.weight(WeightKind::A, Scalar(3), Scalar(2)) == Scalar(2));
    CHECK(ub.weight(WeightKind::BMinus, Scalar(3), Scalar(2)) == Scalar(1));
    CHECK(ub.weight(WeightKind::CMinus, Scalar(3), Scalar(2)) == Scalar(1));
}

TEST_CASE("weight poles are errors, not infinities") {
    WeightTable ua(ModelParams::rational(1), Norm::UnitA);
    CHECK_THROWS_AS(ua.weight(WeightKind::CPlus, Scalar(0), Scalar(1)), PoleError);
    CHECK_NOTHROW(ua.weight(WeightKind::A, Scalar(0), Scalar(1)));  // a has no pole in unit-a
    WeightTable ub(ModelParams::rational(1), Norm::UnitB);
    CHECK_THROWS_AS(ub.weight(WeightKind::A, Scalar(2), Scalar(2)), PoleError);
    CHECK_THROWS_AS(WeightTable(ModelParams::trig(1, Scalar(1)), Norm::UnitB),
                    std::invalid_argument);
}

TEST_CASE("r_entry reproduces the 4x4 A1 matrix") {
    WeightTable t(ModelParams::rational(1), Norm::UnitA);
    Scalar x(5), y(2);
    // basis order (00, 01, 10, 11) on (alpha, beta): row (ia, ib), col (ja, jb)
    Scalar a = t.weight(WeightKind::A, x, y);
    Scalar bp = t.weight(WeightKind::BPlus, x, y), bm = t.weight(WeightKind::BMinus, x, y);
    Scalar cp = t.weight(WeightKind::CPlus, x, y), cm = t.weight(WeightKind::CMinus, x, y);
    Scalar expect[4][4] = {{a, Scalar(0), Scalar(0), Scalar(0)},
                           {Scalar(0), bp, cp, Scalar(0)},
                           {Scalar(0), cm, bm, Scalar(0)},
                           {Scalar(0), Scalar(0), Scalar(0), a}};
    for (int ia = 0; ia <= 1; ++ia)
        for (int ib = 0; ib <= 1; ++ib)
            for (int ja = 0; ja <= 1; ++ja)
                for (int jb = 0; jb <= 1; ++jb)
                    CHECK(r_entry(t, x, y, ia, ja, ib, jb) == expect[2 * ia + ib][2 * ja + jb]);
}

TEST_CASE("r_entry examples and colour conservation") {
    WeightTable t1(ModelParams::rational(1), Norm::UnitA);
    CHECK(r_entry(t1, Scalar(4), Scalar(1), 0, 0, 0, 0) == Scalar(1));
    WeightTable t2(ModelParams::rational(2), Norm::UnitA);
    CHECK(r_entry(t2, Scalar(1), Scalar(0), 0, 1, 1, 0) == Scalar(1, 2));
    CHECK(r_entry(t2, Scalar(1), Scalar(0), 0, 0, 1, 2).is_zero());
    CHECK_THROWS_AS(r_entry(t2, Scalar(1), Scalar(0), 0, 0, 3, 3), std::invalid_argument);
}

TEST_CASE("R has (n+1)(2n+1) nonzero entries") {
    for (int n = 1; n <= 3; ++n) {
        auto entries = r_nonzero_entries(n);
        CHECK(static_cast<int>(entries.size()) == (n + 1) * (2 * n + 1));
        WeightTable t(ModelParams::rational(n), Norm::UnitA);
        // and no other entry is nonzero
        long nz = 0;
        for (Colour ia = 0; ia <= n; ++ia)
            for (Colour ja = 0; ja <= n; ++ja)
                for (Colour ib = 0; ib <= n; ++ib)
                    for (Colour jb = 0; jb <= n; ++jb)
                        if (!r_entry(t, Scalar(17), Scalar(3), ia, ja, ib, jb).is_zero()) ++nz;
        CHECK(nz == (n + 1) * (2 * n + 1));
    }
}

TEST_CASE("Yang-Baxter residual vanishes exactly in rational mode") {
    WeightTable t1(ModelParams::rational(1), Norm::UnitA);
    CHECK(ybe_residual(t1, Scalar(5), Scalar(3), Scalar(2)).is_zero());
    WeightTable t2(ModelParams::rational(2), Norm::UnitA);
    CHECK(ybe_residual(t2, Scalar(7), Scalar(4), Scalar(1)).is_zero());
    // unit-b is a uniform rescaling per crossing, so it satisfies the YBE too
    WeightTable tb(ModelParams::rational(2), Norm::UnitB);
    CHECK(ybe_residual(tb, Scalar(7), Scalar(4), Scalar(1)).is_zero());
}

TEST_CASE("Yang-Baxter residual is tiny in trig mode") {
    WeightTable t(ModelParams::trig(1, Scalar(1, 2)), Norm::UnitA);
    Scalar r = ybe_residual(t, Scalar(3, 2), Scalar(1), Scalar(1, 3));
    CHECK(r.is_float());
    CHECK(r.abs().to_float(256) < BigFloat::pow2(-200, 256));
}
