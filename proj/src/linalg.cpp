#include "anvm/linalg.hpp"

#include <algorithm>

namespace anvm {

Scalar vandermonde(const std::vector<Scalar>& xs, bool negated) {
    Scalar p(1);
    const size_t n = xs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) p *= negated ? xs[i] - xs[j] : xs[j] - xs[i];
    return p;
}

namespace {

// Bareiss elimination on an integer matrix; all divisions are exact.
Scalar det_rational(const Matrix& m) {
    const size_t n = m.size();
    // scale each row to integers, tracking the denominator product
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class denom(1);
    for (size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].rational().get_den().get_mpz_t());
        for (size_t j = 0; j < n; ++j) {
            const mpq_class& q = m[i][j].rational();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
        denom *= l;
    }
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Scalar(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpq_class r(a[n - 1][n - 1] * sign, denom);
    r.canonicalize();
    return Scalar(std::move(r));
}

Scalar det_float(const Matrix& m) {
    const size_t n = m.size();
    unsigned prec = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.is_float()) prec = prec ? std::min(prec, e.flt().precision()) : e.flt().precision();
    if (prec == 0) prec = BigFloat::kDefaultPrec;
    std::vector<std::vector<BigFloat>> a(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i].push_back(m[i][j].to_float(prec));
    BigFloat d(1L, prec);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        for (size_t i = k + 1; i < n; ++i)
            if (a[p][k].abs() < a[i][k].abs()) p = i;
        if (a[p][k].is_zero()) return Scalar(BigFloat(prec));
        if (p != k) {
            std::swap(a[k], a[p]);
            d = -d;
        }
        d = d * a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            BigFloat f = a[i][k] / a[k][k];
            for (size_t j = k + 1; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return Scalar(d);
}

}  // namespace

Scalar det(const Matrix& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix is not square");
    if (n == 0) return Scalar(1);
    bool rational = true;
    for (const auto& row : m)
        for (const auto& e : row) rational &= e.is_rational();
    return rational ? det_rational(m) : det_float(m);
}

}  // namespace anvm
