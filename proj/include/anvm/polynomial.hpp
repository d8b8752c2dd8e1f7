#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "anvm/scalar.hpp"

namespace anvm {

/// Univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(Scalar v) { return Polynomial({std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; −1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// Coefficient of x^k (0 beyond the degree).
    Scalar coeff(size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    Scalar leading() const { return is_zero() ? Scalar(0) : c_.back(); }

    Scalar eval(const Scalar& x) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    /// Quotient and remainder (rational coefficients).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    std::string to_string() const;

  private:
    void normalize();
    std::vector<Scalar> c_;
};

/// Unique polynomial of degree < #points through the given points.
/// Exact-rational abscissae must be pairwise distinct.
Polynomial interpolate(const std::vector<std::pair<Scalar, Scalar>>& points);

/// lim_{b→∞} b·f(b) for f = P/D with D(b) = Π_j (b − denomRoots_j) and
/// deg P ≤ deg D − 1. Evaluates f at deg D + 1 fresh rational points
/// (auto-reselected past denominator roots), interpolates P = f·D, and
/// returns its coefficient of b^{deg D − 1}. Throws std::runtime_error
/// "limit diverges" when deg P = deg D.
///
/// sampleBase shifts the sample window; two disjoint windows must give
/// identical results (tested as an invariant).
Scalar limit_at_infinity(const std::function<Scalar(const Scalar&)>& f,
                         const std::vector<Scalar>& denomRoots, long sampleBase = 1009);

}  // namespace anvm
