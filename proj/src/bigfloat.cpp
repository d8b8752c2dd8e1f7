#include "anvm/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace anvm {

BigFloat::BigFloat(unsigned prec) : prec_(prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, unsigned prec) : prec_(prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& q, unsigned prec) : prec_(prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pow2(long e, unsigned prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_decimal(const std::string& s, unsigned prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat: bad decimal string '" + s + "'");
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define ANVM_BF_BINOP(op, fn)                                   \
    BigFloat BigFloat::operator op(const BigFloat & o) const {  \
        BigFloat r(std::min(prec_, o.prec_));                   \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                          \
        return r;                                               \
    }

ANVM_BF_BINOP(+, mpfr_add)
ANVM_BF_BINOP(-, mpfr_sub)
ANVM_BF_BINOP(*, mpfr_mul)

BigFloat BigFloat::operator/(const BigFloat& o) const {
    if (o.is_zero()) throw std::domain_error("BigFloat: division by zero");
    BigFloat r(std::min(prec_, o.prec_));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

#undef ANVM_BF_BINOP

BigFloat BigFloat::abs() const {
    BigFloat r(prec_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sinh() const {
    BigFloat r(prec_);
    mpfr_sinh(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(prec_);
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec_);
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }

std::string BigFloat::to_string() const {
    if (is_zero()) return "0";
    mpfr_exp_t e;
    // ~prec*log10(2) significant digits
    size_t digits = static_cast<size_t>(prec_ * 0.30103) + 2;
    std::vector<char> buf(digits + 16);
    mpfr_get_str(buf.data(), &e, 10, digits, v_, MPFR_RNDN);
    std::string m(buf.data());
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m = m.substr(1);
    }
    // strip trailing zeros of the mantissa
    size_t last = m.find_last_not_of('0');
    m = m.substr(0, std::max<size_t>(last + 1, 1));
    return sign + "0." + m + "e" + std::to_string(e);
}

}  // namespace anvm
