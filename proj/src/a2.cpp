#include "anvm/a2.hpp"

#include <algorithm>

#include "anvm/linalg.hpp"
#include "anvm/polynomial.hpp"
#include "anvm/scalar_product.hpp"

namespace anvm {
namespace a2 {

namespace {

constexpr Colour kWhite = 0, kBlack = 1, kRed = 2;

ModelParams a2_model() { return ModelParams::rational(2); }

Scalar factorial(size_t k) {
    Scalar f(1);
    for (size_t i = 2; i <= k; ++i) f *= Scalar(static_cast<long>(i));
    return f;
}

}  // namespace

void Spec::validate() const {
    if (x1s.size() != b1s.size() && !b1s.empty())
        throw std::invalid_argument("a2::Spec: |b1s| must be |x1s| or empty");
    if (x2s.size() != b2s.size() && !b2s.empty())
        throw std::invalid_argument("a2::Spec: |b2s| must be |x2s| or empty");
    if (x1s.size() + x2s.size() > ys.size() + zs.size())
        throw std::invalid_argument("a2::Spec: requires l + m <= L + M");
}

Lattice build(const Spec& spec, Layout layout) {
    spec.validate();
    const size_t m = spec.x2s.size(), l = spec.x1s.size();
    if (spec.b1s.size() != l || spec.b2s.size() != m)
        throw std::invalid_argument("a2::build: full spec requires both b families");
    Lattice lat;
    lat.model = a2_model();
    lat.norm = Norm::UnitB;
    using S = EdgeRef::Side;

    if (layout == Layout::Fig1a) {
        // rows bottom..top: x2 | x1 horizontal parts | b1 horizontal parts | b2
        for (size_t i = 0; i < m; ++i)
            lat.rows.push_back({spec.x2s[i], EdgeCondition::fixed(kRed), EdgeCondition::fixed(kBlack)});
        for (size_t i = 0; i < l; ++i)  // left end joins the stub; any colour until tied
            lat.rows.push_back({spec.x1s[i], EdgeCondition::summed({0, 1, 2}), EdgeCondition::fixed(kWhite)});
        for (size_t i = 0; i < l; ++i)
            lat.rows.push_back({spec.b1s[i], EdgeCondition::fixed(kWhite), EdgeCondition::summed({0, 1, 2})});
        for (size_t i = 0; i < m; ++i)
            lat.rows.push_back({spec.b2s[i], EdgeCondition::fixed(kBlack), EdgeCondition::fixed(kRed)});
        // cols left..right: x1 stubs (x1_l..x1_1) | y | z (anti) | b1 stubs (b1_l..b1_1)
        for (size_t i = l; i-- > 0;)
            lat.cols.push_back({spec.x1s[i], EdgeCondition::fixed(kBlack), EdgeCondition::summed({0, 1, 2})});
        for (const auto& y : spec.ys)
            lat.cols.push_back({y, EdgeCondition::fixed(kWhite), EdgeCondition::fixed(kWhite)});
        for (const auto& z : spec.zs)
            lat.cols.push_back({z, EdgeCondition::fixed(kRed), EdgeCondition::fixed(kRed), true});
        for (size_t i = l; i-- > 0;)
            lat.cols.push_back({spec.b1s[i], EdgeCondition::summed({0, 1, 2}), EdgeCondition::fixed(kBlack)});
        const size_t R = lat.rows.size(), C = lat.cols.size();
        lat.active.assign(R, std::vector<bool>(C, true));
        for (size_t r = 0; r < R; ++r)
            for (size_t c = 0; c < C; ++c) {
                if (c < l) lat.active[r][c] = r < m;                       // x1 stubs cross x2 rows
                if (c >= l + spec.ys.size() + spec.zs.size())
                    lat.active[r][c] = r >= m + 2 * l;                     // b1 stubs cross b2 rows
            }
        // ties: x1_k stub top <-> x1_k row left; b1_k row right <-> b1_k stub bottom
        for (size_t k = 0; k < l; ++k) {
            int stub = static_cast<int>(l - 1 - k);  // stub of x1_{k+1} sits at column l-1-k
            lat.ties.push_back({{S::ColTop, stub}, {S::RowLeft, static_cast<int>(m + k)}});
            int bstub = static_cast<int>(C - 1 - k);
            lat.ties.push_back({{S::RowRight, static_cast<int>(m + l + k)}, {S::ColBottom, bstub}});
        }
    } else {
        // rows bottom..top: x1 | x2 | b2 | b1 horizontal parts
        for (size_t i = 0; i < l; ++i)
            lat.rows.push_back({spec.x1s[i], EdgeCondition::fixed(kBlack), EdgeCondition::summed({0, 1, 2})});
        for (size_t i = 0; i < m; ++i)
            lat.rows.push_back({spec.x2s[i], EdgeCondition::fixed(kRed), EdgeCondition::fixed(kBlack)});
        for (size_t i = 0; i < m; ++i)
            lat.rows.push_back({spec.b2s[i], EdgeCondition::fixed(kBlack), EdgeCondition::fixed(kRed)});
        for (size_t i = 0; i < l; ++i)
            lat.rows.push_back({spec.b1s[i], EdgeCondition::summed({0, 1, 2}), EdgeCondition::fixed(kBlack)});
        // cols: b1 stubs (b1_l..b1_1) | y | z (anti) | x1 stubs (x1_l..x1_1)
        for (size_t i = l; i-- > 0;)
            lat.cols.push_back({spec.b1s[i], EdgeCondition::fixed(kWhite), EdgeCondition::summed({0, 1, 2})});
        for (const auto& y : spec.ys)
            lat.cols.push_back({y, EdgeCondition::fixed(kWhite), EdgeCondition::fixed(kWhite)});
        for (const auto& z : spec.zs)
            lat.cols.push_back({z, EdgeCondition::fixed(kRed), EdgeCondition::fixed(kRed), true});
        for (size_t i = l; i-- > 0;)
            lat.cols.push_back({spec.x1s[i], EdgeCondition::summed({0, 1, 2}), EdgeCondition::fixed(kWhite)});
        const size_t R = lat.rows.size(), C = lat.cols.size();
        lat.active.assign(R, std::vector<bool>(C, true));
        for (size_t r = 0; r < R; ++r)
            for (size_t c = 0; c < C; ++c) {
                if (c < l) lat.active[r][c] = (r >= l + m && r < l + 2 * m);  // b1 stubs x b2 rows
                if (c >= l + spec.ys.size() + spec.zs.size())
                    lat.active[r][c] = (r >= l && r < l + m);                 // x1 stubs x x2 rows
            }
        for (size_t k = 0; k < l; ++k) {
            int bstub = static_cast<int>(l - 1 - k);
            lat.ties.push_back({{S::ColTop, bstub}, {S::RowLeft, static_cast<int>(l + 2 * m + k)}});
            int xstub = static_cast<int>(C - 1 - k);
            lat.ties.push_back({{S::RowRight, static_cast<int>(k)}, {S::ColBottom, xstub}});
        }
    }
    return lat;
}

PartitionValue a2_scalar_product(const Spec& spec, Layout layout, Method method) {
    return evaluate(build(spec, layout), method);
}

Lattice build_degenerate_b2(const Spec& spec) {
    const size_t m = spec.x2s.size(), l = spec.x1s.size();
    if (spec.b1s.size() != l) throw std::invalid_argument("degenerate_b2: needs b1s");
    Lattice lat;
    lat.model = a2_model();
    lat.norm = Norm::UnitB;
    using S = EdgeRef::Side;
    for (size_t i = 0; i < m; ++i)
        lat.rows.push_back({spec.x2s[i], EdgeCondition::fixed(kRed), EdgeCondition::fixed(kBlack)});
    for (size_t i = 0; i < l; ++i)
        lat.rows.push_back({spec.x1s[i], EdgeCondition::summed({0, 1, 2}), EdgeCondition::fixed(kWhite)});
    for (size_t i = 0; i < l; ++i)  // right ends are the summed alpha edges
        lat.rows.push_back({spec.b1s[i], EdgeCondition::fixed(kWhite), EdgeCondition::summed({kBlack, kRed})});
    for (size_t i = l; i-- > 0;)
        lat.cols.push_back({spec.x1s[i], EdgeCondition::fixed(kBlack), EdgeCondition::summed({0, 1, 2})});
    for (const auto& y : spec.ys)
        lat.cols.push_back({y, EdgeCondition::fixed(kWhite), EdgeCondition::fixed(kWhite)});
    for (const auto& z : spec.zs)  // beta edges enter from the top
        lat.cols.push_back({z, EdgeCondition::fixed(kRed), EdgeCondition::summed({kBlack, kRed}), true});
    const size_t R = lat.rows.size(), C = lat.cols.size();
    lat.active.assign(R, std::vector<bool>(C, true));
    for (size_t r = 0; r < R; ++r)
        for (size_t c = 0; c < C; ++c) {
            if (c < l) lat.active[r][c] = r < m;                              // x1 stubs x x2 rows
            if (c >= l + spec.ys.size()) lat.active[r][c] = r < m + l;        // z misses b1 rows
        }
    for (size_t k = 0; k < l; ++k) {
        int stub = static_cast<int>(l - 1 - k);
        lat.ties.push_back({{S::ColTop, stub}, {S::RowLeft, static_cast<int>(m + k)}});
    }
    SignedCountConstraint cc;
    for (size_t k = 0; k < l; ++k) cc.group_a.push_back({S::RowRight, static_cast<int>(m + l + k)});
    cc.colour_a = kRed;
    for (size_t k = 0; k < spec.zs.size(); ++k)
        cc.group_b.push_back({S::ColTop, static_cast<int>(l + spec.ys.size() + k)});
    cc.colour_b = kBlack;
    cc.target = static_cast<int>(m);
    cc.sign = SignedCountConstraint::SignOn::GroupB;
    lat.constraint = cc;
    return lat;
}

Lattice build_degenerate_b1(const Spec& spec) {
    const size_t m = spec.x2s.size(), l = spec.x1s.size();
    if (spec.b2s.size() != m) throw std::invalid_argument("degenerate_b1: needs b2s");
    Lattice lat;
    lat.model = a2_model();
    lat.norm = Norm::UnitB;
    using S = EdgeRef::Side;
    for (size_t i = 0; i < l; ++i)
        lat.rows.push_back({spec.x1s[i], EdgeCondition::fixed(kBlack), EdgeCondition::summed({0, 1, 2})});
    for (size_t i = 0; i < m; ++i)
        lat.rows.push_back({spec.x2s[i], EdgeCondition::fixed(kRed), EdgeCondition::fixed(kBlack)});
    for (size_t i = 0; i < m; ++i)  // left ends are the summed alpha edges
        lat.rows.push_back({spec.b2s[i], EdgeCondition::summed({kWhite, kBlack}), EdgeCondition::fixed(kRed)});
    for (const auto& y : spec.ys)  // beta edges leave at the top
        lat.cols.push_back({y, EdgeCondition::fixed(kWhite), EdgeCondition::summed({kWhite, kBlack})});
    for (const auto& z : spec.zs)
        lat.cols.push_back({z, EdgeCondition::fixed(kRed), EdgeCondition::fixed(kRed), true});
    for (size_t i = l; i-- > 0;)
        lat.cols.push_back({spec.x1s[i], EdgeCondition::summed({0, 1, 2}), EdgeCondition::fixed(kWhite)});
    const size_t R = lat.rows.size(), C = lat.cols.size();
    lat.active.assign(R, std::vector<bool>(C, true));
    for (size_t r = 0; r < R; ++r)
        for (size_t c = 0; c < C; ++c) {
            if (c < spec.ys.size()) lat.active[r][c] = r < l + m;             // y misses b2 rows
            if (c >= spec.ys.size() + spec.zs.size())
                lat.active[r][c] = (r >= l && r < l + m);                     // x1 stubs x x2 rows
        }
    for (size_t k = 0; k < l; ++k) {
        int xstub = static_cast<int>(C - 1 - k);
        lat.ties.push_back({{S::RowRight, static_cast<int>(k)}, {S::ColBottom, xstub}});
    }
    SignedCountConstraint cc;
    for (size_t k = 0; k < m; ++k) cc.group_a.push_back({S::RowLeft, static_cast<int>(l + m + k)});
    cc.colour_a = kWhite;
    for (size_t k = 0; k < spec.ys.size(); ++k)
        cc.group_b.push_back({S::ColTop, static_cast<int>(k)});
    cc.colour_b = kBlack;
    cc.target = static_cast<int>(l);
    cc.sign = SignedCountConstraint::SignOn::GroupA;
    lat.constraint = cc;
    return lat;
}

Scalar sequential_limit(const std::function<Scalar(const std::vector<Scalar>&)>& f,
                        const std::vector<std::vector<Scalar>>& denomRoots) {
    const size_t k = denomRoots.size();
    if (k == 0) return f({});
    std::function<Scalar(size_t, std::vector<Scalar>&)> rec = [&](size_t depth,
                                                                  std::vector<Scalar>& fixed) {
        // limit over variable `depth` (variables above it already sent to infinity)
        auto g = [&](const Scalar& b) {
            fixed[depth] = b;
            if (depth == 0) return f(fixed);
            return rec(depth - 1, fixed);
        };
        return limit_at_infinity(g, denomRoots[depth]);
    };
    std::vector<Scalar> fixed(k, Scalar(0));
    return rec(k - 1, fixed);
}

PartitionValue Degeneration::value() const {
    bool equal;
    if (signed_sum.is_rational() && sequential_limit.is_rational())
        equal = signed_sum == sequential_limit;
    else
        equal = ((signed_sum - sequential_limit).abs().to_float(BigFloat::kDefaultPrec) <
                 BigFloat::pow2(-150));
    if (!equal)
        throw VerificationError("degeneration method disagreement: signed sum " +
                                signed_sum.to_string() + " vs sequential limit " +
                                sequential_limit.to_string());
    return {signed_sum, Provenance::Limit, ModelKind::Rational, Norm::UnitB};
}

Degeneration degenerate_b2(const Spec& spec, Method method) {
    const size_t m = spec.x2s.size();
    Degeneration out{Scalar(0), Scalar(0)};
    out.signed_sum = evaluate(build_degenerate_b2(spec), method).value;
    if (m == 0) {
        out.sequential_limit = out.signed_sum;
        return out;
    }
    // denominator roots of each b2 variable, read off the compiled layout
    Spec probe = spec;
    probe.b2s.assign(m, Scalar(0));
    Lattice full = build(probe, Layout::Fig1a);
    const size_t l = spec.x1s.size();
    std::vector<std::vector<Scalar>> roots;
    for (size_t i = 0; i < m; ++i)
        roots.push_back(full.crossing_rapidities(EdgeRef::Side::RowLeft,
                                                 static_cast<int>(m + 2 * l + i)));
    auto f = [&](const std::vector<Scalar>& b2s) {
        Spec s = spec;
        s.b2s = b2s;
        return a2_scalar_product(s, Layout::Fig1a, method).value;
    };
    out.sequential_limit = sequential_limit(f, roots) / factorial(m);
    return out;
}

Degeneration degenerate_b1(const Spec& spec, Method method) {
    const size_t l = spec.x1s.size();
    Degeneration out{Scalar(0), Scalar(0)};
    out.signed_sum = evaluate(build_degenerate_b1(spec), method).value;
    if (l == 0) {
        out.sequential_limit = out.signed_sum;
        return out;
    }
    Spec probe = spec;
    probe.b1s.assign(l, Scalar(0));
    Lattice full = build(probe, Layout::Fig1b);
    const size_t m = spec.x2s.size();
    std::vector<std::vector<Scalar>> roots;
    for (size_t i = 0; i < l; ++i) {
        // a bent line occupies a row track and a stub column track; poles
        // come from the crossings of both
        auto r = full.crossing_rapidities(EdgeRef::Side::RowLeft, static_cast<int>(l + 2 * m + i));
        auto stub = full.crossing_rapidities(EdgeRef::Side::ColBottom, static_cast<int>(l - 1 - i));
        r.insert(r.end(), stub.begin(), stub.end());
        roots.push_back(std::move(r));
    }
    auto f = [&](const std::vector<Scalar>& b1s) {
        Spec s = spec;
        s.b1s = b1s;
        return a2_scalar_product(s, Layout::Fig1b, method).value;
    };
    out.sequential_limit = sequential_limit(f, roots) / factorial(l);
    return out;
}

Scalar partial_det(const std::vector<Scalar>& xs, const std::vector<Scalar>& plus,
                   const std::vector<Scalar>& minus) {
    const size_t N = xs.size();
    Scalar vx = vandermonde(xs);
    if (vx.is_zero()) throw std::invalid_argument("partial_det: coincident xs");
    Matrix k(N, std::vector<Scalar>(N));
    for (size_t i = 0; i < N; ++i) {
        Scalar fp(1), fm(1);
        for (const auto& w : plus) {
            Scalar d = xs[i] - w;
            if (d.is_zero()) throw PoleError("partial_det: x_i hits a plus-set rapidity");
            fp *= (d + Scalar(1)) / d;
        }
        for (const auto& w : minus) {
            Scalar d = xs[i] - w;
            if (d.is_zero()) throw PoleError("partial_det: x_i hits a minus-set rapidity");
            fm *= (d - Scalar(1)) / d;
        }
        Scalar xp(1), xp1(1);
        for (size_t j = 0; j < N; ++j) {
            k[i][j] = xp * fp - xp1 * fm;
            xp *= xs[i];
            xp1 *= xs[i] + Scalar(1);
        }
    }
    return det(k) / vx;
}

Scalar fund_slavnov_unit_b(const std::vector<Scalar>& x1s, const std::vector<Scalar>& b1s,
                           const std::vector<Scalar>& ys) {
    const size_t l = x1s.size();
    std::vector<Scalar> F(l, Scalar(1)), G(l, Scalar(1));
    for (size_t i = 0; i < l; ++i)
        for (const auto& y : ys) {
            Scalar d = x1s[i] - y;
            if (d.is_zero()) throw PoleError("fund_slavnov_unit_b: x1_i = y_k");
            F[i] *= (d + Scalar(1)) / d;
        }
    return sp::slavnov_kernel(x1s, b1s, F, G);
}

Scalar antifund_slavnov(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                        const std::vector<Scalar>& zs) {
    const size_t mm = x2s.size();
    std::vector<Scalar> F(mm, Scalar(1)), G(mm, Scalar(1));
    for (size_t i = 0; i < mm; ++i)
        for (const auto& z : zs) {
            Scalar d = x2s[i] - z;
            if (d.is_zero()) throw PoleError("antifund_slavnov: x2_i = z_k");
            G[i] *= (d - Scalar(1)) / d;
        }
    return sp::slavnov_kernel(x2s, b2s, F, G);
}

PartitionValue fact1(const std::vector<Scalar>& x2s, const std::vector<Scalar>& x1s,
                     const std::vector<Scalar>& b1s, const std::vector<Scalar>& ys,
                     const std::vector<Scalar>& zs) {
    Scalar v = fund_slavnov_unit_b(x1s, b1s, ys) * partial_det(x2s, x1s, zs);
    return {std::move(v), Provenance::Determinant, ModelKind::Rational, Norm::UnitB};
}

PartitionValue fact2(const std::vector<Scalar>& x2s, const std::vector<Scalar>& x1s,
                     const std::vector<Scalar>& b2s, const std::vector<Scalar>& ys,
                     const std::vector<Scalar>& zs) {
    Scalar v = antifund_slavnov(x2s, b2s, zs) * partial_det(x1s, ys, x2s);
    return {std::move(v), Provenance::Determinant, ModelKind::Rational, Norm::UnitB};
}

Lattice build_colour_fixed_b2(const std::vector<Scalar>& x1s, const std::vector<Scalar>& b1s,
                              const std::vector<Scalar>& ys, const std::vector<Scalar>& zs,
                              const std::vector<Colour>& iColours,
                              const std::vector<Colour>& jColours) {
    const size_t l = x1s.size();
    if (iColours.size() != l || b1s.size() != l || jColours.size() != zs.size())
        throw std::invalid_argument("build_colour_fixed_b2: size mismatch");
    Lattice lat;
    lat.model = a2_model();
    lat.norm = Norm::UnitB;
    for (size_t i = 0; i < l; ++i)
        lat.rows.push_back({x1s[i], EdgeCondition::fixed(iColours[i]), EdgeCondition::fixed(kWhite)});
    for (size_t i = 0; i < l; ++i)
        lat.rows.push_back({b1s[i], EdgeCondition::fixed(kWhite), EdgeCondition::summed({kBlack, kRed})});
    for (const auto& y : ys)
        lat.cols.push_back({y, EdgeCondition::fixed(kWhite), EdgeCondition::fixed(kWhite)});
    // the beta sum carries a minus sign for every black exit
    for (size_t k = 0; k < zs.size(); ++k)
        lat.cols.push_back({zs[k], EdgeCondition::fixed(jColours[k]),
                            EdgeCondition::weighted({{kBlack, Scalar(-1)}, {kRed, Scalar(1)}}),
                            true});
    const size_t R = lat.rows.size(), C = lat.cols.size();
    lat.active.assign(R, std::vector<bool>(C, true));
    for (size_t r = l; r < R; ++r)
        for (size_t c = ys.size(); c < C; ++c) lat.active[r][c] = false;  // z misses b1 rows
    return lat;
}

Lattice build_colour_fixed_b1(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                              const std::vector<Scalar>& ys, const std::vector<Scalar>& zs,
                              const std::vector<Colour>& jColours,
                              const std::vector<Colour>& iColours) {
    const size_t m = x2s.size();
    if (iColours.size() != m || b2s.size() != m || jColours.size() != ys.size())
        throw std::invalid_argument("build_colour_fixed_b1: size mismatch");
    Lattice lat;
    lat.model = a2_model();
    lat.norm = Norm::UnitB;
    for (size_t i = 0; i < m; ++i)
        lat.rows.push_back({x2s[i], EdgeCondition::fixed(kRed), EdgeCondition::fixed(iColours[i])});
    // the alpha sum carries a minus sign for every white entry
    for (size_t i = 0; i < m; ++i)
        lat.rows.push_back({b2s[i],
                            EdgeCondition::weighted({{kWhite, Scalar(-1)}, {kBlack, Scalar(1)}}),
                            EdgeCondition::fixed(kRed)});
    for (size_t k = 0; k < ys.size(); ++k)
        lat.cols.push_back({ys[k], EdgeCondition::fixed(jColours[k]),
                            EdgeCondition::summed({kWhite, kBlack})});
    for (const auto& z : zs)
        lat.cols.push_back({z, EdgeCondition::fixed(kRed), EdgeCondition::fixed(kRed), true});
    const size_t R = lat.rows.size(), C = lat.cols.size();
    lat.active.assign(R, std::vector<bool>(C, true));
    for (size_t r = m; r < R; ++r)
        for (size_t c = 0; c < ys.size(); ++c) lat.active[r][c] = false;  // y misses b2 rows
    return lat;
}

Lattice build_antifund_sp(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                          const std::vector<Scalar>& zs) {
    Lattice lat;
    lat.model = a2_model();
    lat.norm = Norm::UnitB;
    for (const auto& x : x2s)
        lat.rows.push_back({x, EdgeCondition::fixed(kRed), EdgeCondition::fixed(kBlack)});
    for (const auto& b : b2s)
        lat.rows.push_back({b, EdgeCondition::fixed(kBlack), EdgeCondition::fixed(kRed)});
    for (const auto& z : zs)
        lat.cols.push_back({z, EdgeCondition::fixed(kRed), EdgeCondition::fixed(kRed), true});
    return lat;
}

Lattice build_mixed_sp_x1z(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                           const std::vector<Scalar>& x1s, const std::vector<Scalar>& zs) {
    Lattice lat = build_antifund_sp(x2s, b2s, zs);
    std::vector<Lattice::Col> cols;
    for (size_t i = x1s.size(); i-- > 0;)
        cols.push_back({x1s[i], EdgeCondition::fixed(kBlack), EdgeCondition::fixed(kBlack)});
    cols.insert(cols.end(), lat.cols.begin(), lat.cols.end());
    lat.cols = std::move(cols);
    return lat;
}

Lattice build_mixed_sp_yx2(const std::vector<Scalar>& x1s, const std::vector<Scalar>& b1s,
                           const std::vector<Scalar>& ys, const std::vector<Scalar>& x2s) {
    Lattice lat;
    lat.model = a2_model();
    lat.norm = Norm::UnitB;
    for (const auto& x : x1s)
        lat.rows.push_back({x, EdgeCondition::fixed(kBlack), EdgeCondition::fixed(kWhite)});
    for (const auto& b : b1s)
        lat.rows.push_back({b, EdgeCondition::fixed(kWhite), EdgeCondition::fixed(kBlack)});
    for (const auto& y : ys)
        lat.cols.push_back({y, EdgeCondition::fixed(kWhite), EdgeCondition::fixed(kWhite)});
    for (const auto& x : x2s)
        lat.cols.push_back({x, EdgeCondition::fixed(kBlack), EdgeCondition::fixed(kBlack), true});
    return lat;
}

}  // namespace a2
}  // namespace anvm
