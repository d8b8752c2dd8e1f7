#include <doctest.h>

#include <random>

#include "anvm/dwpf.hpp"

using namespace anvm;
namespace dw = anvm::dwpf;
using dw::Spec;
using dw::dwpf_ik;
using dw::dwpf_ik_trig;
using dw::dwpf_ik_unit_b;
using dw::coloured_dwpf;
using dw::pdwpf;
using dw::pdwpf_det;

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

TEST_CASE("dwpf fixed instances") {
    CHECK(dw::dwpf({{Scalar(2)}, {Scalar(0)}}).value == Scalar(1, 3));
    CHECK(dw::dwpf({{Scalar(2), Scalar(3)}, {Scalar(0), Scalar(1)}}).value == Scalar(1, 6));
}

TEST_CASE("dwpf recursion at x_N = y_N") {
    std::vector<Scalar> xs{Scalar(21, 2), Scalar(5)};
    std::vector<Scalar> ys{Scalar(1, 3), Scalar(5)};
    CHECK(dw::dwpf({xs, ys}).value == dw::dwpf({{xs[0]}, {ys[0]}}).value);
}

TEST_CASE("dwpf_ik equals enumeration") {
    CHECK(dwpf_ik({Scalar(2)}, {Scalar(0)}).value == Scalar(1, 3));
    CHECK(dwpf_ik({Scalar(2), Scalar(3)}, {Scalar(0), Scalar(1)}).value == Scalar(1, 6));
    std::mt19937_64 rng(31);
    for (int N = 1; N <= 4; ++N) {
        auto xs = distinct(rng, N, 20, 34);
        auto ys = distinct(rng, N, 0, 12);
        CHECK(dwpf_ik(xs, ys).value == dw::dwpf({xs, ys}).value);
        CHECK(dwpf_ik(xs, ys).value == dw::dwpf({xs, ys}, Method::FrontierDP).value);
    }
    CHECK_THROWS_AS(dwpf_ik({Scalar(2), Scalar(2)}, {Scalar(0), Scalar(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dwpf_ik({Scalar(2)}, {Scalar(2)}), PoleError);
}

TEST_CASE("dwpf_ik_trig equals trig enumeration") {
    Scalar gamma(1, 2);
    // N=1 fixed instance: e^{-1} sinh(1)/sinh(2) at gamma = 1
    {
        Scalar v = dwpf_ik_trig({Scalar(1)}, {Scalar(0)}, Scalar(1)).value;
        Scalar expect = exp(Scalar(-1), 256) * sinh(Scalar(1), 256) / sinh(Scalar(2), 256);
        CHECK((v - expect).abs().to_float(256) < BigFloat::pow2(-240, 256));
    }
    std::mt19937_64 rng(37);
    for (int N = 1; N <= 3; ++N) {
        auto xs = distinct(rng, N, 20, 34);
        auto ys = distinct(rng, N, 0, 12);
        Spec spec{xs, ys, {}, ModelParams::trig(1, gamma), Norm::UnitA};
        Scalar diff = dwpf_ik_trig(xs, ys, gamma).value - dw::dwpf(spec).value;
        CHECK(diff.abs().to_float(256) < BigFloat::pow2(-200, 256));
    }
    // trig recursion: x_N = y_N collapses to the smaller system
    {
        std::vector<Scalar> xs{Scalar(3), Scalar(1)}, ys{Scalar(1, 4), Scalar(1)};
        Scalar lhs = dwpf_ik_trig(xs, ys, gamma).value;
        Scalar rhs = dwpf_ik_trig({xs[0]}, {ys[0]}, gamma).value;
        CHECK((lhs - rhs).abs().to_float(256) < BigFloat::pow2(-200, 256));
    }
}

TEST_CASE("coloured dwpf is colour independent") {
    std::vector<Scalar> xs{Scalar(2), Scalar(3)}, ys{Scalar(0), Scalar(1)};
    ModelParams n2 = ModelParams::rational(2);
    // N = 1: both colours give the c- weight 1/(x-y+1) = 1/6
    CHECK(coloured_dwpf({{Scalar(7)}, {Scalar(2)}, {1}, n2}).value == Scalar(1, 6));
    CHECK(coloured_dwpf({{Scalar(7)}, {Scalar(2)}, {2}, n2}).value ==
          dw::dwpf({{Scalar(7)}, {Scalar(2)}}).value);
    CHECK(coloured_dwpf({xs, ys, {2, 1}, n2}).value == Scalar(1, 6));
    CHECK(coloured_dwpf({xs, ys, {2, 2}, n2, Norm::UnitA}, Method::FrontierDP).value ==
          Scalar(1, 6));
}

TEST_CASE("pdwpf examples and determinant") {
    CHECK(pdwpf({Scalar(3)}, {Scalar(0), Scalar(1)}).value == Scalar(1));
    CHECK(pdwpf_det({Scalar(3)}, {Scalar(0), Scalar(1)}).value == Scalar(1));
    // N = L: the top sum collapses and pdwpf equals the unit-b DWPF
    std::vector<Scalar> xs{Scalar(21, 2), Scalar(14)}, ys{Scalar(1, 3), Scalar(5)};
    CHECK(pdwpf(xs, ys).value == dwpf_ik_unit_b(xs, ys).value);
    // 1x1 unit-b c-weight
    CHECK(pdwpf_det({Scalar(2)}, {Scalar(0)}).value == Scalar(1, 2));
    std::mt19937_64 rng(41);
    for (int N = 1; N <= 3; ++N)
        for (int L = N; L <= 5; ++L) {
            auto xs2 = distinct(rng, N, 20, 34);
            auto ys2 = distinct(rng, L, 0, 12);
            CHECK(pdwpf(xs2, ys2).value == pdwpf_det(xs2, ys2).value);
        }
}
