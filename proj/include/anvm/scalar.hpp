#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

#include "anvm/bigfloat.hpp"

namespace anvm {

/// Raised when a vertex weight (or determinant kernel) is evaluated at a
/// pole of its defining expression.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when two independent computation routes disagree.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A number in one of two modes: exact rational (lowest terms, positive
/// denominator) or arbitrary-precision float. Mixing a rational with a
/// float yields a float at the float's precision; mixing two floats
/// rounds to the smaller precision.
class Scalar {
  public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(int n) : v_(mpq_class(n)) {}
    Scalar(long n) : v_(mpq_class(static_cast<signed long>(n))) {}
    Scalar(long num, long den);
    Scalar(mpq_class q) : v_(std::move(q)) { canonical(); }
    Scalar(BigFloat f) : v_(std::move(f)) {}

    /// Parses "p/q" or "p" (exact), or a decimal string when prec > 0.
    static Scalar parse_rational(const std::string& s);

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    bool is_float() const { return !is_rational(); }
    const mpq_class& rational() const;
    const BigFloat& flt() const;
    BigFloat to_float(unsigned prec = BigFloat::kDefaultPrec) const;

    bool is_zero() const;
    int sign() const;
    Scalar abs() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Exact equality for rationals; mpfr comparison when floats involved.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    /// "p/q" for rationals (q > 0, lowest terms), mantissa/exponent
    /// decimal string for floats.
    std::string to_string() const;

  private:
    void canonical();
    std::variant<mpq_class, BigFloat> v_;
};

inline Scalar sinh(const Scalar& s, unsigned prec = BigFloat::kDefaultPrec) {
    return Scalar(s.to_float(prec).sinh());
}
inline Scalar exp(const Scalar& s, unsigned prec = BigFloat::kDefaultPrec) {
    return Scalar(s.to_float(prec).exp());
}

}  // namespace anvm
