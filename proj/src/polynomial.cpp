#include "anvm/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace anvm {

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar r(0);
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> r;
    for (const auto& x : c_) r.push_back(-x);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    std::vector<Scalar> rem = c_;
    std::vector<Scalar> quo(rem.size() > d.c_.size() ? rem.size() - d.c_.size() + 1 : 1, Scalar(0));
    while (rem.size() >= d.c_.size() && !rem.empty()) {
        Scalar f = rem.back() / d.c_.back();
        size_t shift = rem.size() - d.c_.size();
        quo[shift] = f;
        for (size_t k = 0; k < d.c_.size(); ++k) rem[shift + k] -= f * d.c_[k];
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if (rem.size() < d.c_.size()) break;
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << c_[k].to_string();
        if (k > 0) os << "*b^" << k;
    }
    return os.str();
}

Polynomial interpolate(const std::vector<std::pair<Scalar, Scalar>>& points) {
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissae");
    if (n == 0) return Polynomial();
    // Newton divided differences, then expansion of the Newton basis
    std::vector<Scalar> dd;
    dd.reserve(n);
    for (const auto& p : points) dd.push_back(p.second);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);
    Polynomial result;
    Polynomial basis({Scalar(1)});
    for (size_t j = 0; j < n; ++j) {
        result = result + basis * Polynomial::constant(dd[j]);
        basis = basis * Polynomial({-points[j].first, Scalar(1)});
    }
    return result;
}

Scalar limit_at_infinity(const std::function<Scalar(const Scalar&)>& f,
                         const std::vector<Scalar>& denomRoots, long sampleBase) {
    const size_t d = denomRoots.size();
    if (d == 0) {
        // f is entire with zero-degree denominator; b·f diverges unless f ≡ 0
        if (!f(Scalar(sampleBase)).is_zero()) throw std::runtime_error("limit diverges");
        return Scalar(0);
    }
    std::vector<std::pair<Scalar, Scalar>> pts;
    long cand = sampleBase;
    long attempts = 0;
    while (pts.size() < d + 1) {
        if (++attempts > static_cast<long>(d) + 128)
            throw std::runtime_error("sample point collision");
        Scalar s(cand++);
        bool hit = false;
        for (const auto& r : denomRoots) hit |= (s == r);
        if (hit) continue;
        Scalar denom(1);
        for (const auto& r : denomRoots) denom *= s - r;
        pts.emplace_back(s, f(s) * denom);
    }
    Polynomial p = interpolate(pts);
    Scalar top = p.coeff(d);
    bool diverges;
    if (top.is_rational()) {
        diverges = !top.is_zero();
    } else {
        // float mode: the true zero coefficient only cancels to roundoff
        unsigned prec = top.flt().precision();
        diverges = !(top.abs().flt() < BigFloat::pow2(-static_cast<long>(prec) / 2, prec));
    }
    if (diverges) throw std::runtime_error("limit diverges");
    return p.coeff(d - 1);
}

}  // namespace anvm
