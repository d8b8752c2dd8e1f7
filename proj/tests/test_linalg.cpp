#include <doctest.h>

#include <random>

#include "anvm/linalg.hpp"

using namespace anvm;

namespace {

// independent oracle: cofactor expansion
Scalar det_cofactor(const Matrix& m) {
    const size_t n = m.size();
    if (n == 0) return Scalar(1);
    if (n == 1) return m[0][0];
    Scalar d(0);
    for (size_t j = 0; j < n; ++j) {
        Matrix minor(n - 1, std::vector<Scalar>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1][cc++] = m[r][c];
        }
        Scalar term = m[0][j] * det_cofactor(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

}  // namespace

TEST_CASE("vandermonde products") {
    CHECK(vandermonde({Scalar(2), Scalar(3)}) == Scalar(1));
    CHECK(vandermonde({Scalar(0), Scalar(1)}, true) == Scalar(-1));
    CHECK(vandermonde({Scalar(5)}) == Scalar(1));
    CHECK(vandermonde({}) == Scalar(1));
}

TEST_CASE("vandermonde sign relation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 1 + rep % 5;
        std::vector<Scalar> xs;
        for (int i = 0; i < n; ++i) xs.push_back(Scalar(d(rng), 1 + rep % 3));
        Scalar lhs = vandermonde(xs) * vandermonde(xs, true);
        int e = n * (n - 1) / 2;
        Scalar rhs = vandermonde(xs) * vandermonde(xs);
        if (e % 2) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("determinant fixed examples") {
    CHECK(det({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}}) == Scalar(-2));
    CHECK(det({{Scalar(1), Scalar(0), Scalar(0)},
               {Scalar(0), Scalar(1), Scalar(0)},
               {Scalar(0), Scalar(0), Scalar(1)}}) == Scalar(1));
    // the 2x2 IK kernel at x = {2,3}, y = {0,1}
    CHECK(det({{Scalar(1, 6), Scalar(1, 2)}, {Scalar(1, 12), Scalar(1, 6)}}) == Scalar(-1, 72));
    CHECK_THROWS_AS(det({{Scalar(1), Scalar(2)}}), std::invalid_argument);
}

TEST_CASE("bareiss matches cofactor expansion on random rational matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 5);
    for (int n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 6; ++rep) {
            Matrix m(n, std::vector<Scalar>(n));
            for (auto& row : m)
                for (auto& e : row) e = Scalar(num(rng), den(rng));
            CHECK(det(m) == det_cofactor(m));
        }
}

TEST_CASE("singular and float determinants") {
    Matrix m{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK(det(m).is_zero());
    Matrix f{{Scalar(Scalar(1, 3).to_float(200)), Scalar(1)}, {Scalar(1), Scalar(3)}};
    Scalar d = det(f);
    CHECK(d.is_float());
    CHECK(d.flt().precision() == 200);
    CHECK((d - Scalar(0)).abs().to_float(200) < BigFloat::pow2(-190, 200));
}
