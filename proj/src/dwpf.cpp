#include "anvm/dwpf.hpp"

#include "anvm/linalg.hpp"

namespace anvm {
namespace dwpf {

Lattice build(const Spec& spec) {
    const size_t N = spec.xs.size();
    if (spec.ys.size() != N) throw std::invalid_argument("dwpf: |ys| must equal |xs|");
    Lattice lat;
    lat.model = spec.model;
    lat.norm = spec.norm;
    const bool coloured = !spec.colours.empty();
    if (coloured && spec.colours.size() != N)
        throw std::invalid_argument("dwpf: |colours| must equal |xs|");
    std::vector<Colour> nonwhite;
    for (Colour c = 1; c <= spec.model.rank; ++c) nonwhite.push_back(c);
    for (size_t i = 0; i < N; ++i) {
        Colour in = coloured ? spec.colours[i] : 1;
        if (coloured && in < 1) throw std::invalid_argument("dwpf: left colours must be >= 1");
        lat.rows.push_back({spec.xs[i], EdgeCondition::fixed(in), EdgeCondition::fixed(0)});
    }
    for (size_t j = 0; j < N; ++j) {
        EdgeCondition top =
            coloured ? EdgeCondition::summed(nonwhite) : EdgeCondition::fixed(1);
        lat.cols.push_back({spec.ys[j], EdgeCondition::fixed(0), top});
    }
    return lat;
}

PartitionValue dwpf(const Spec& spec, Method method) { return evaluate(build(spec), method); }

PartitionValue coloured_dwpf(const Spec& spec, Method method) {
    if (spec.colours.empty()) throw std::invalid_argument("coloured_dwpf: colours required");
    if (spec.norm != Norm::UnitA)
        throw std::invalid_argument("coloured_dwpf: unit-a normalization required");
    return evaluate(build(spec), method);
}

PartitionValue dwpf_ik(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    const size_t N = xs.size();
    if (ys.size() != N) throw std::invalid_argument("dwpf_ik: |ys| must equal |xs|");
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Scalar d = xs[i] - ys[j];
            if (d.is_zero() || (d + Scalar(1)).is_zero())
                throw PoleError("dwpf_ik: kernel pole at x_i - y_j in {0, -1}");
        }
    Scalar vx = vandermonde(xs), vy = vandermonde(ys, true);
    if (vx.is_zero() || vy.is_zero())
        throw std::invalid_argument("dwpf_ik: coincident rapidities");
    Scalar pref(1);
    Matrix k(N, std::vector<Scalar>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Scalar d = xs[i] - ys[j];
            pref *= d;
            k[i][j] = Scalar(1) / (d * (d + Scalar(1)));
        }
    Scalar v = pref / (vx * vy) * det(k);
    return {std::move(v), Provenance::Determinant, ModelKind::Rational, Norm::UnitA};
}

PartitionValue dwpf_ik_unit_b(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    // the unit-b form absorbs the crossing factor into the kernel rows:
    // Z_b = det[ Π_{k≠j}(x_i−y_k+1) / (x_i−y_j) ] / (Δ{x}Δ{−y}),
    // leaving poles only at x_i = y_j
    const size_t N = xs.size();
    if (ys.size() != N) throw std::invalid_argument("dwpf_ik_unit_b: |ys| must equal |xs|");
    Scalar vx = vandermonde(xs), vy = vandermonde(ys, true);
    if (vx.is_zero() || vy.is_zero())
        throw std::invalid_argument("dwpf_ik_unit_b: coincident rapidities");
    Matrix k(N, std::vector<Scalar>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Scalar d = xs[i] - ys[j];
            if (d.is_zero()) throw PoleError("dwpf_ik_unit_b: kernel pole at x_i = y_j");
            Scalar num(1);
            for (size_t t = 0; t < N; ++t)
                if (t != j) num *= xs[i] - ys[t] + Scalar(1);
            k[i][j] = num / d;
        }
    Scalar v = det(k) / (vx * vy);
    return {std::move(v), Provenance::Determinant, ModelKind::Rational, Norm::UnitB};
}

PartitionValue dwpf_ik_trig(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys,
                            const Scalar& gamma, unsigned prec) {
    const size_t N = xs.size();
    if (ys.size() != N) throw std::invalid_argument("dwpf_ik_trig: |ys| must equal |xs|");
    // an exact coincidence x_i = y_j reduces the system by one (the kernel
    // itself is singular there, but the partition function is not)
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            if (xs[i].is_rational() && ys[j].is_rational() && xs[i] == ys[j]) {
                std::vector<Scalar> xr, yr;
                for (size_t k = 0; k < N; ++k)
                    if (k != i) xr.push_back(xs[k]);
                for (size_t k = 0; k < N; ++k)
                    if (k != j) yr.push_back(ys[k]);
                return dwpf_ik_trig(xr, yr, gamma, prec);
            }
    Scalar sum(0);
    for (const auto& y : ys) sum += y;
    for (const auto& x : xs) sum -= x;
    Scalar pref = exp(sum, prec);
    Scalar vx(BigFloat(1L, prec)), vy(BigFloat(1L, prec));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) {
            vx *= sinh(xs[j] - xs[i], prec);
            vy *= sinh(ys[i] - ys[j], prec);
        }
    if (vx.is_zero() || vy.is_zero())
        throw std::invalid_argument("dwpf_ik_trig: coincident rapidities");
    Scalar shg = sinh(gamma, prec);
    Matrix k(N, std::vector<Scalar>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Scalar sh = sinh(xs[i] - ys[j], prec);
            Scalar shp = sinh(xs[i] - ys[j] + gamma, prec);
            if (sh.is_zero() || shp.is_zero()) throw PoleError("dwpf_ik_trig: sinh kernel pole");
            pref *= sh;
            k[i][j] = shg / (sh * shp);
        }
    Scalar v = pref / (vx * vy) * det(k);
    return {std::move(v), Provenance::Determinant, ModelKind::Trigonometric, Norm::UnitA};
}

PartitionValue pdwpf(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys, Method method) {
    const size_t N = xs.size(), L = ys.size();
    if (N > L) throw std::invalid_argument("pdwpf: requires |xs| <= |ys|");
    Lattice lat;
    lat.model = ModelParams::rational(1);
    lat.norm = Norm::UnitB;
    for (const auto& x : xs)
        lat.rows.push_back({x, EdgeCondition::fixed(1), EdgeCondition::fixed(0)});
    for (const auto& y : ys)
        lat.cols.push_back({y, EdgeCondition::fixed(0), EdgeCondition::summed({0, 1})});
    return evaluate(lat, method);
}

PartitionValue pdwpf_det(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    const size_t N = xs.size();
    Scalar vx = vandermonde(xs);
    if (vx.is_zero()) throw std::invalid_argument("pdwpf_det: coincident xs");
    Matrix k(N, std::vector<Scalar>(N));
    for (size_t i = 0; i < N; ++i) {
        Scalar prod(1);
        for (const auto& y : ys) {
            Scalar d = xs[i] - y;
            if (d.is_zero()) throw PoleError("pdwpf_det: x_i = y_k");
            prod *= (d + Scalar(1)) / d;
        }
        Scalar xp(1), xp1(1);
        for (size_t j = 0; j < N; ++j) {
            k[i][j] = xp * prod - xp1;
            xp *= xs[i];
            xp1 *= xs[i] + Scalar(1);
        }
    }
    Scalar v = det(k) / vx;
    return {std::move(v), Provenance::Determinant, ModelKind::Rational, Norm::UnitB};
}

}  // namespace dwpf
}  // namespace anvm
