#include "anvm/scalar.hpp"

#include <algorithm>

namespace anvm {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    v_ = std::move(q);
}

void Scalar::canonical() {
    if (is_rational()) std::get<mpq_class>(v_).canonicalize();
}

Scalar Scalar::parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Scalar: bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Scalar: zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(std::move(q));
}

const mpq_class& Scalar::rational() const {
    if (!is_rational()) throw std::logic_error("Scalar: float value used where exact rational required");
    return std::get<mpq_class>(v_);
}

const BigFloat& Scalar::flt() const {
    if (is_rational()) throw std::logic_error("Scalar: rational value is not a float");
    return std::get<BigFloat>(v_);
}

BigFloat Scalar::to_float(unsigned prec) const {
    if (is_rational()) return BigFloat(rational(), prec);
    return flt();
}

bool Scalar::is_zero() const {
    return is_rational() ? sgn(rational()) == 0 : flt().is_zero();
}

int Scalar::sign() const {
    return is_rational() ? sgn(rational()) : flt().sign();
}

Scalar Scalar::abs() const {
    if (is_rational()) return Scalar(mpq_class(::abs(rational())));
    return Scalar(flt().abs());
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-rational()));
    return Scalar(-flt());
}

namespace {

template <typename RatOp, typename FltOp>
Scalar binop(const Scalar& a, const Scalar& b, RatOp rop, FltOp fop) {
    if (a.is_rational() && b.is_rational()) return Scalar(rop(a.rational(), b.rational()));
    // promote the rational side at the float side's precision
    if (a.is_rational()) return Scalar(fop(a.to_float(b.flt().precision()), b.flt()));
    if (b.is_rational()) return Scalar(fop(a.flt(), b.to_float(a.flt().precision())));
    return Scalar(fop(a.flt(), b.flt()));
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    return binop(*this, o, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); },
                 [](const BigFloat& x, const BigFloat& y) { return x + y; });
}

Scalar Scalar::operator-(const Scalar& o) const {
    return binop(*this, o, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); },
                 [](const BigFloat& x, const BigFloat& y) { return x - y; });
}

Scalar Scalar::operator*(const Scalar& o) const {
    return binop(*this, o, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x * y); },
                 [](const BigFloat& x, const BigFloat& y) { return x * y; });
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    return binop(*this, o, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x / y); },
                 [](const BigFloat& x, const BigFloat& y) { return x / y; });
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() && o.is_rational()) return rational() == o.rational();
    return (*this - o).is_zero();
}

bool Scalar::operator<(const Scalar& o) const { return (*this - o).sign() < 0; }

std::string Scalar::to_string() const {
    if (is_rational()) {
        const mpq_class& q = rational();
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    return flt().to_string();
}

}  // namespace anvm
