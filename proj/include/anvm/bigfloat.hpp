#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace anvm {

/// Arbitrary-precision binary float backed by MPFR.
///
/// Every value carries its working precision in bits. Binary operations
/// round to the minimum of the operand precisions, so precision is never
/// silently upgraded past what the least precise input can support.
class BigFloat {
  public:
    static constexpr unsigned kDefaultPrec = 256;

    explicit BigFloat(unsigned prec = kDefaultPrec);
    BigFloat(long v, unsigned prec);
    BigFloat(const mpq_class& q, unsigned prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    unsigned precision() const { return prec_; }

    /// 2^e at the given precision (used for tolerance thresholds).
    static BigFloat pow2(long e, unsigned prec = kDefaultPrec);
    static BigFloat from_decimal(const std::string& s, unsigned prec);

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;

    BigFloat abs() const;
    BigFloat sinh() const;
    BigFloat exp() const;
    BigFloat sqrt() const;

    bool is_zero() const;
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator==(const BigFloat& o) const { return cmp(o) == 0; }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string() const;

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

  private:
    mpfr_t v_;
    unsigned prec_;
};

}  // namespace anvm
