#include <doctest.h>

#include <random>

#include "anvm/bethe.hpp"
#include "anvm/dwpf.hpp"
#include "anvm/polynomial.hpp"
#include "anvm/scalar_product.hpp"

using namespace anvm;

namespace {

std::vector<Scalar> distinct(std::mt19937_64& rng, int k, long lo, long hi, long maxden = 3) {
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

}  // namespace

TEST_CASE("full scalar product fixed instance") {
    sp::Spec spec{{Scalar(3)}, {Scalar(4)}, {Scalar(0), Scalar(2)}};
    CHECK(sp::scalar_product(spec).value == Scalar(19, 120));
    CHECK(sp::scalar_product(spec, Method::FrontierDP).value == Scalar(19, 120));
}

TEST_CASE("restricted m=0 case matches the DWPF times b-weights") {
    sp::Spec spec{{Scalar(3)}, {}, {Scalar(0), Scalar(2)}};
    CHECK(sp::scalar_product(spec).value == Scalar(1, 8));
    // general m=0 identity at another size
    std::mt19937_64 rng(43);
    auto xs = distinct(rng, 2, 20, 34);
    auto ys = distinct(rng, 4, 0, 12);
    sp::Spec s2{xs, {}, ys};
    Scalar expect = dwpf::dwpf({xs, {ys[0], ys[1]}}).value;
    for (const auto& x : xs)
        for (size_t j = 2; j < ys.size(); ++j)
            expect *= (x - ys[j]) / (x - ys[j] + Scalar(1));
    CHECK(sp::scalar_product(s2).value == expect);
}

TEST_CASE("restricted recursion: b_m = y_{N-m+1} lowers m") {
    std::mt19937_64 rng(47);
    auto xs = distinct(rng, 2, 20, 34);
    // the restricted b sits on a quantum rapidity, so the y's must keep
    // their mutual differences away from ±1
    std::vector<Scalar> ys{Scalar(1, 3), Scalar(4), Scalar(19, 3)};
    for (int m = 1; m <= 2; ++m) {
        auto bs = distinct(rng, m, 40, 54);
        bs[m - 1] = ys[2 - m + 1 - 1];  // y_{N-m+1}, 1-based
        sp::Spec full{xs, bs, ys};
        sp::Spec smaller{xs, {bs.begin(), bs.end() - 1}, ys};
        CHECK(sp::scalar_product(full).value == sp::scalar_product(smaller).value);
    }
}

TEST_CASE("property A: numerator degree bound in b_m") {
    std::mt19937_64 rng(53);
    const int N = 2, L = 3, m = 2;
    auto xs = distinct(rng, N, 20, 34);
    auto ys = distinct(rng, L, 0, 12);
    auto bs = distinct(rng, m, 40, 54);
    auto F = [&](const Scalar& t) {
        auto b2 = bs;
        b2[m - 1] = t;
        Scalar v = sp::scalar_product({xs, b2, ys}).value;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < L; ++j) v *= xs[i] - ys[j] + Scalar(1);
        for (int i = 0; i < m; ++i)
            for (int j = N - m; j < L; ++j) v *= b2[i] - ys[j] + Scalar(1);
        return v;
    };
    std::vector<std::pair<Scalar, Scalar>> pts;
    const int degBound = L - N + m - 1;
    for (int k = 0; k <= degBound + 2; ++k)
        pts.emplace_back(Scalar(60 + 3 * k), F(Scalar(60 + 3 * k)));
    Polynomial p = interpolate(pts);
    CHECK(p.degree() <= degBound);
}

TEST_CASE("property B: symmetry in the unrestricted y block") {
    std::mt19937_64 rng(59);
    const int N = 2, L = 4, m = 1;
    auto xs = distinct(rng, N, 20, 34);
    auto ys = distinct(rng, L, 0, 12);
    auto bs = distinct(rng, m, 40, 54);
    Scalar base = sp::scalar_product({xs, bs, ys}).value;
    // swapping within {y_{N-m+1}, .., y_L} = indices 1..3 (0-based)
    for (int j = N - m; j + 1 < L; ++j) {
        auto y2 = ys;
        std::swap(y2[j], y2[j + 1]);
        CHECK(sp::scalar_product({xs, bs, y2}).value == base);
    }
}

TEST_CASE("coloured scalar product equals the plain one") {
    ModelParams n2 = ModelParams::rational(2);
    sp::Spec c1{{Scalar(3)}, {Scalar(4)}, {Scalar(0), Scalar(2)}, {2}, n2};
    CHECK(sp::coloured_scalar_product(c1).value == Scalar(19, 120));
    // all-black colours over n = 1 build the very same lattice
    sp::Spec c0{{Scalar(3)}, {Scalar(4)}, {Scalar(0), Scalar(2)}, {1}, ModelParams::rational(1)};
    CHECK(sp::coloured_scalar_product(c0).value == Scalar(19, 120));
    std::mt19937_64 rng(61);
    auto xs = distinct(rng, 2, 20, 34);
    auto bs = distinct(rng, 2, 40, 54);
    auto ys = distinct(rng, 3, 0, 12);
    sp::Spec plain{xs, bs, ys};
    sp::Spec c2{xs, bs, ys, {2, 2}, n2};
    CHECK(sp::coloured_scalar_product(c2).value == sp::scalar_product(plain).value);
}

TEST_CASE("slavnov agrees with enumeration exactly on shell") {
    std::vector<Scalar> ys{Scalar(0), Scalar(2)};
    std::vector<Scalar> xs{Scalar(3)}, bs{Scalar(1, 2)};
    CHECK(sp::slavnov(xs, bs, ys).value == Scalar(-1, 4));
    CHECK(sp::scalar_product({xs, bs, ys}).value == Scalar(-1, 4));
    // off shell the two differ (and stay exact rationals)
    Scalar off = sp::slavnov(xs, {Scalar(4)}, ys).value;
    CHECK(off != Scalar(19, 120));
}

TEST_CASE("slavnov rejects degenerate inputs") {
    CHECK_THROWS_AS(sp::slavnov({Scalar(3), Scalar(3)}, {Scalar(1), Scalar(2)}, {Scalar(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sp::slavnov({Scalar(3)}, {Scalar(3)}, {Scalar(0)}), std::invalid_argument);
}

TEST_CASE("ik_sum reproduces the scalar product in unit-b") {
    CHECK(sp::ik_sum({Scalar(3)}, {Scalar(4)}, {Scalar(0), Scalar(2)}).value == Scalar(19, 24));
    CHECK(sp::ik_sum({}, {}, {}).value == Scalar(1));
    std::mt19937_64 rng(67);
    for (int N = 1; N <= 2; ++N)
        for (int L = N; L <= 3; ++L) {
            auto xs = distinct(rng, N, 20, 34);
            auto bs = distinct(rng, N, 40, 54);
            auto ys = distinct(rng, L, 0, 12);
            sp::Spec spec{xs, bs, ys, {}, ModelParams::rational(1), Norm::UnitB};
            CHECK(sp::ik_sum(xs, bs, ys).value == sp::scalar_product(spec).value);
        }
}
