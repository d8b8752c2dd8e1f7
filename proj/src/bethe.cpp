#include "anvm/bethe.hpp"

#include <algorithm>
#include <random>

#include "anvm/polynomial.hpp"

namespace anvm {
namespace bethe {

namespace {

// Linear form v[vi] − v[vj] − shift (vj = −1 drops the second term).
struct Factor {
    int vi;
    int vj;
    Scalar shift;
    Scalar eval(const std::vector<Scalar>& v) const {
        Scalar r = v[vi] - shift;
        if (vj >= 0) r -= v[vj];
        return r;
    }
    // d/dv_k
    int deriv(int k) const { return (vi == k ? 1 : 0) - (vj == k ? 1 : 0); }
};

// One cleared equation: Π lhs − Π rhs.
struct Eq {
    std::vector<Factor> lhs, rhs;
    Scalar eval(const std::vector<Scalar>& v) const {
        Scalar a(1), b(1);
        for (const auto& f : lhs) a *= f.eval(v);
        for (const auto& f : rhs) b *= f.eval(v);
        return a - b;
    }
    Scalar deriv(const std::vector<Scalar>& v, int k) const {
        auto prod_deriv = [&](const std::vector<Factor>& fs) {
            Scalar d(0);
            for (size_t i = 0; i < fs.size(); ++i) {
                int fd = fs[i].deriv(k);
                if (fd == 0) continue;
                Scalar p(static_cast<long>(fd));
                for (size_t j = 0; j < fs.size(); ++j)
                    if (j != i) p *= fs[j].eval(v);
                d += p;
            }
            return d;
        };
        return prod_deriv(lhs) - prod_deriv(rhs);
    }
};

std::vector<Eq> build_equations(Variant variant, const std::vector<Scalar>& ys,
                                const std::vector<Scalar>& zs, int n1, int n2) {
    std::vector<Eq> eqs;
    const Scalar one(1);
    // cleared form E_i = Π_{j≠i}(b_i−b_j−1)·[rhs numerators]
    //                  − Π_{j≠i}(b_i−b_j+1)·[rhs denominators],
    // so that the N=1 fundamental case over {0,2} reads (b+1)(b−1) − b(b−2)
    auto family = [&](int base, int count, const std::vector<Scalar>& quantum, bool anti,
                      int otherBase, int otherCount, bool nested) {
        for (int i = 0; i < count; ++i) {
            Eq e;
            for (int j = 0; j < count; ++j) {
                if (j == i) continue;
                e.lhs.push_back({base + i, base + j, one});
                e.rhs.push_back({base + i, base + j, -one});
            }
            for (const auto& w : quantum) {
                if (!anti) {
                    e.lhs.push_back({base + i, -1, w - one});
                    e.rhs.push_back({base + i, -1, w});
                } else {
                    e.lhs.push_back({base + i, -1, w});
                    e.rhs.push_back({base + i, -1, w + one});
                }
            }
            if (nested) {
                // coupling: fundamental side carries Π(b1−b2)/(b1−b2−1),
                // anti-fundamental side Π(b2−b1+1)/(b2−b1)
                for (int k = 0; k < otherCount; ++k) {
                    if (!anti) {
                        e.lhs.push_back({base + i, otherBase + k, Scalar(0)});
                        e.rhs.push_back({base + i, otherBase + k, one});
                    } else {
                        e.lhs.push_back({base + i, otherBase + k, -one});
                        e.rhs.push_back({base + i, otherBase + k, Scalar(0)});
                    }
                }
            }
            eqs.push_back(std::move(e));
        }
    };
    switch (variant) {
        case Variant::A1Fundamental: family(0, n1, ys, false, 0, 0, false); break;
        case Variant::A1AntiFundamental: family(0, n1, zs, true, 0, 0, false); break;
        case Variant::A2Nested:
            family(0, n1, ys, false, n1, n2, true);
            family(n1, n2, zs, true, 0, n1, true);
            break;
    }
    return eqs;
}

std::vector<Scalar> concat(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

// ---- univariate path ----

Polynomial expand_univariate(const Eq& e) {
    auto prod = [](const std::vector<Factor>& fs) {
        Polynomial p({Scalar(1)});
        for (const auto& f : fs) p = p * Polynomial({-f.shift, Scalar(1)});
        return p;
    };
    return prod(e.lhs) - prod(e.rhs);
}

// number of sign changes of the Sturm chain at x
int sturm_changes(const std::vector<Polynomial>& chain, const Scalar& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

bool rationalize(const BigFloat& x, mpq_class& out);

// isolates and refines the real roots of a squarefree-ish rational polynomial
std::vector<Scalar> real_roots(const Polynomial& p, unsigned prec) {
    std::vector<Scalar> roots;
    Polynomial q = p;
    // exact rational roots first: candidates p/q from the integer-cleared poly
    {
        mpz_class lcm(1);
        for (const auto& c : q.coeffs())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
        std::vector<mpz_class> zc;
        for (const auto& c : q.coeffs()) {
            mpq_class s = c.rational() * lcm;
            zc.push_back(s.get_num());
        }
        size_t lo = 0;
        while (lo < zc.size() && zc[lo] == 0) {
            roots.push_back(Scalar(0));
            ++lo;
        }
        if (lo) {
            std::vector<Scalar> shifted(q.coeffs().begin() + lo, q.coeffs().end());
            q = Polynomial(shifted);
        }
        // trial-divide small rational candidates via divisors of |a0|, |ad|
        auto divisors = [](const mpz_class& n) {
            std::vector<mpz_class> ds;
            mpz_class a = abs(n);
            for (mpz_class d(1); d * d <= a && d < 100000; ++d)
                if (a % d == 0) {
                    ds.push_back(d);
                    ds.push_back(a / d);
                }
            return ds;
        };
        if (q.degree() >= 1) {
            // rebuild integer form of the deflated poly
            mpz_class l2(1);
            for (const auto& c : q.coeffs())
                mpz_lcm(l2.get_mpz_t(), l2.get_mpz_t(), c.rational().get_den().get_mpz_t());
            std::vector<mpz_class> ic;
            for (const auto& c : q.coeffs()) ic.push_back(mpq_class(c.rational() * l2).get_num());
            if (ic.front() != 0 && ic.back() != 0) {
                for (const auto& pn : divisors(ic.front()))
                    for (const auto& qd : divisors(ic.back()))
                        for (int s : {1, -1}) {
                            mpq_class cand(pn * s, qd);
                            cand.canonicalize();
                            Scalar c(cand);
                            while (q.degree() >= 1 && q.eval(c).is_zero()) {
                                roots.push_back(c);
                                q = q.divmod(Polynomial({-c, Scalar(1)})).first;
                            }
                        }
            }
        }
    }
    if (q.degree() < 1) return roots;
    // Sturm isolation over a Cauchy bound, exact arithmetic
    Scalar bound(1);
    for (int k = 0; k < q.degree(); ++k) {
        Scalar r = (q.coeff(k) / q.leading()).abs();
        if (bound < r) bound = r;
    }
    bound += Scalar(1);
    auto chain = sturm_chain(q);
    std::vector<std::pair<Scalar, Scalar>> stack{{-bound, bound}};
    std::vector<std::pair<Scalar, Scalar>> isolated;
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int k = sturm_changes(chain, a) - sturm_changes(chain, b);
        if (k <= 0) continue;
        if (k == 1) {
            isolated.emplace_back(a, b);
            continue;
        }
        Scalar mid = (a + b) / Scalar(2);
        if (q.eval(mid).is_zero()) {
            // rational midpoint root (rare): deflate handled above; nudge
            mid = (a + mid) / Scalar(2);
        }
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    for (auto [a, b] : isolated) {
        // exact bisection, then Newton polish in floats
        for (int it = 0; it < 64; ++it) {
            Scalar mid = (a + b) / Scalar(2);
            Scalar fm = q.eval(mid);
            if (fm.is_zero()) {
                a = b = mid;
                break;
            }
            if ((q.eval(a) * fm).sign() < 0)
                b = mid;
            else
                a = mid;
        }
        if (a == b) {
            roots.push_back(a);
            continue;
        }
        BigFloat x = ((a + b) / Scalar(2)).to_float(prec);
        Polynomial dq = q.derivative();
        for (unsigned it = 0; it < prec / 16 + 8; ++it) {
            Scalar fx = q.eval(Scalar(x));
            Scalar dfx = dq.eval(Scalar(x));
            if (dfx.is_zero()) break;
            x = (Scalar(x) - fx / dfx).to_float(prec);
        }
        // a refined root may still be rational (missed by trial division)
        mpq_class cand;
        if (rationalize(x, cand) && q.eval(Scalar(cand)).is_zero())
            roots.push_back(Scalar(cand));
        else
            roots.push_back(Scalar(x));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// continued-fraction rationalization of a float, verified by the caller
bool rationalize(const BigFloat& x, mpq_class& out) {
    BigFloat v = x;
    mpz_class p0(0), q0(1), p1(1), q1(0);
    for (int it = 0; it < 64; ++it) {
        mpfr_t fl;
        mpfr_init2(fl, v.precision());
        mpfr_floor(fl, v.raw());
        mpz_class a;
        mpfr_get_z(a.get_mpz_t(), fl, MPFR_RNDN);
        mpfr_clear(fl);
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > mpz_class(1) << 48) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        mpq_class cand(p1, q1);
        cand.canonicalize();
        BigFloat diff = (x - BigFloat(cand, x.precision())).abs();
        if (diff < BigFloat::pow2(-static_cast<long>(x.precision()) + 80, x.precision())) {
            out = cand;
            return true;
        }
        BigFloat frac = v - BigFloat(mpq_class(a), v.precision());
        if (frac.is_zero()) break;
        v = BigFloat(1L, v.precision()) / frac;
    }
    return false;
}

bool near(const Scalar& a, const Scalar& b, const BigFloat& tol) {
    if (a.is_rational() && b.is_rational()) return a == b;
    return (a - b).abs().to_float(tol.precision()) < tol;
}

}  // namespace

std::vector<Scalar> residual(Variant variant, const std::vector<Scalar>& ys,
                             const std::vector<Scalar>& zs, const std::vector<Scalar>& roots1,
                             const std::vector<Scalar>& roots2) {
    auto eqs = build_equations(variant, ys, zs, static_cast<int>(roots1.size()),
                               static_cast<int>(roots2.size()));
    std::vector<Scalar> v = concat(roots1, roots2);
    std::vector<Scalar> out;
    for (const auto& e : eqs) out.push_back(e.eval(v));
    return out;
}

System solve(Variant variant, const std::vector<Scalar>& ys, const std::vector<Scalar>& zs,
             int count1, int count2, const SolveConfig& config) {
    if (count1 < 0 || count2 < 0) throw std::invalid_argument("bethe::solve: negative root count");
    if (variant == Variant::A2Nested &&
        count1 + count2 > static_cast<int>(ys.size() + zs.size()))
        throw std::invalid_argument("bethe::solve: requires l + m <= L + M");
    System sys;
    sys.variant = variant;
    sys.ys = ys;
    sys.zs = zs;
    sys.count1 = count1;
    sys.count2 = count2;
    const int K = count1 + count2;
    if (K == 0) {
        sys.solutions.push_back({{}, {}, {}, true});
        return sys;
    }
    auto eqs = build_equations(variant, ys, zs, count1, count2);
    const BigFloat tol = BigFloat::pow2(config.tol_exp, config.prec);

    std::vector<Scalar> quantum = concat(ys, zs);
    auto admissible = [&](const std::vector<Scalar>& v) {
        for (size_t i = 0; i < v.size(); ++i) {
            for (const auto& w : quantum)
                if (near(v[i], w, tol)) return false;
        }
        auto distinct = [&](size_t lo, size_t hi) {
            for (size_t i = lo; i < hi; ++i)
                for (size_t j = i + 1; j < hi; ++j)
                    if (near(v[i], v[j], BigFloat::pow2(-80, config.prec))) return false;
            return true;
        };
        return distinct(0, count1) && distinct(count1, v.size());
    };
    auto push_solution = [&](std::vector<Scalar> v) {
        std::sort(v.begin(), v.begin() + count1,
                  [](const Scalar& a, const Scalar& b) { return a < b; });
        std::sort(v.begin() + count1, v.end(),
                  [](const Scalar& a, const Scalar& b) { return a < b; });
        for (const auto& s : sys.solutions) {
            auto existing = concat(s.roots1, s.roots2);
            bool same = true;
            for (int i = 0; i < K; ++i) same &= near(existing[i], v[i], BigFloat::pow2(-100, config.prec));
            if (same) return;
        }
        Solution sol;
        sol.roots1.assign(v.begin(), v.begin() + count1);
        sol.roots2.assign(v.begin() + count1, v.end());
        sol.exact = true;
        for (const auto& r : v) sol.exact &= r.is_rational();
        sol.residuals = residual(variant, ys, zs, sol.roots1, sol.roots2);
        sys.solutions.push_back(std::move(sol));
    };

    bool exact_inputs = true;
    for (const auto& w : quantum) exact_inputs &= w.is_rational();

    if (K == 1 && exact_inputs) {
        Polynomial p = expand_univariate(eqs[0]);
        if (p.degree() <= 0) {
            sys.no_finite_solution = !p.is_zero();
            sys.note = p.is_zero() ? "cleared equation vanishes identically"
                                   : "cleared equation is a nonzero constant";
            return sys;
        }
        std::vector<Scalar> found;
        if (p.degree() == 1) {
            found.push_back(-p.coeff(0) / p.coeff(1));
        } else if (p.degree() == 2) {
            Scalar a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
            Scalar disc = b * b - Scalar(4) * a * c;
            if (disc.sign() < 0) {
                sys.no_finite_solution = true;
                sys.note = "cleared quadratic has no real root";
                return sys;
            }
            // exact square root when the discriminant is a rational square
            mpq_class d = disc.rational();
            mpz_class sn, sd;
            bool square = mpz_root(sn.get_mpz_t(), d.get_num().get_mpz_t(), 2) != 0 &&
                          mpz_root(sd.get_mpz_t(), d.get_den().get_mpz_t(), 2) != 0;
            Scalar sq = square ? Scalar(mpq_class(sn, sd))
                               : Scalar(disc.to_float(config.prec).sqrt());
            found.push_back((-b + sq) / (Scalar(2) * a));
            found.push_back((-b - sq) / (Scalar(2) * a));
        } else {
            found = real_roots(p, config.prec);
        }
        for (const auto& r : found)
            if (admissible({r})) push_solution({r});
        if (sys.solutions.empty()) {
            sys.no_finite_solution = true;
            sys.note = "no admissible finite root of the cleared polynomial (degree " +
                       std::to_string(p.degree()) + ")";
        }
        return sys;
    }

    // multivariate: damped Newton with random restarts; certifies only what it finds
    std::mt19937_64 rng(config.seed);
    Scalar lo(0), hi(0);
    for (const auto& w : quantum) {
        if (w < lo) lo = w;
        if (hi < w) hi = w;
    }
    lo -= Scalar(3);
    hi += Scalar(3);
    std::uniform_int_distribution<long> num(0, 16 * 12);
    int converged = 0;
    for (int attempt = 0; attempt < config.restarts; ++attempt) {
        std::vector<Scalar> v;
        for (int i = 0; i < K; ++i) {
            Scalar t(num(rng), 16L * 12);
            v.push_back(Scalar((lo + (hi - lo) * t).to_float(config.prec)));
        }
        auto norm_inf = [&](const std::vector<Scalar>& e) {
            BigFloat m(config.prec);
            for (const auto& x : e) {
                BigFloat a = x.abs().to_float(config.prec);
                if (m < a) m = a;
            }
            return m;
        };
        std::vector<Scalar> e;
        for (const auto& q : eqs) e.push_back(q.eval(v));
        bool ok = false;
        for (int it = 0; it < 120; ++it) {
            BigFloat en = norm_inf(e);
            if (en < tol) {
                ok = true;
                break;
            }
            // solve J d = −E by Gaussian elimination
            std::vector<std::vector<Scalar>> J(K, std::vector<Scalar>(K));
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) J[i][j] = eqs[i].deriv(v, j);
            std::vector<Scalar> rhs;
            for (const auto& x : e) rhs.push_back(-x);
            // elimination with partial pivoting
            bool singular = false;
            for (int c = 0; c < K && !singular; ++c) {
                int piv = c;
                for (int r = c + 1; r < K; ++r)
                    if (J[piv][c].abs().to_float(config.prec) < J[r][c].abs().to_float(config.prec))
                        piv = r;
                if (J[piv][c].is_zero()) {
                    singular = true;
                    break;
                }
                std::swap(J[c], J[piv]);
                std::swap(rhs[c], rhs[piv]);
                for (int r = c + 1; r < K; ++r) {
                    Scalar f = J[r][c] / J[c][c];
                    for (int cc = c; cc < K; ++cc) J[r][cc] -= f * J[c][cc];
                    rhs[r] -= f * rhs[c];
                }
            }
            if (singular) break;
            std::vector<Scalar> d(K, Scalar(0));
            for (int r = K - 1; r >= 0; --r) {
                Scalar s = rhs[r];
                for (int cc = r + 1; cc < K; ++cc) s -= J[r][cc] * d[cc];
                d[r] = s / J[r][r];
            }
            // damping: halve the step until the residual norm decreases
            Scalar lambda(1);
            bool improved = false;
            for (int half = 0; half < 24; ++half) {
                std::vector<Scalar> v2;
                for (int i = 0; i < K; ++i) v2.push_back(v[i] + lambda * d[i]);
                std::vector<Scalar> e2;
                for (const auto& q : eqs) e2.push_back(q.eval(v2));
                if (norm_inf(e2) < en) {
                    v = std::move(v2);
                    e = std::move(e2);
                    improved = true;
                    break;
                }
                lambda /= Scalar(2);
            }
            if (!improved) break;
        }
        if (!ok) continue;
        ++converged;
        // exact rationalization when possible
        std::vector<Scalar> vr = v;
        bool all_rat = true;
        for (auto& x : vr) {
            mpq_class q;
            if (rationalize(x.to_float(config.prec), q)) {
                x = Scalar(q);
            } else {
                all_rat = false;
            }
        }
        if (all_rat) {
            bool exact_ok = true;
            for (const auto& q : eqs) exact_ok &= q.eval(vr).is_zero();
            if (exact_ok && admissible(vr)) {
                push_solution(vr);
                continue;
            }
        }
        if (admissible(v)) push_solution(v);
    }
    sys.note = "newton search: " + std::to_string(config.restarts) + " restarts, " +
               std::to_string(converged) + " converged, " +
               std::to_string(sys.solutions.size()) + " distinct admissible";
    return sys;
}

}  // namespace bethe
}  // namespace anvm
