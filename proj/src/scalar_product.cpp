#include "anvm/scalar_product.hpp"

#include "anvm/dwpf.hpp"
#include "anvm/linalg.hpp"

namespace anvm {
namespace sp {

Lattice build(const Spec& spec) {
    const size_t N = spec.xs.size(), m = spec.bs.size(), L = spec.ys.size();
    if (m > N || N > L)
        throw std::invalid_argument("scalar_product: requires m <= N <= L");
    const bool coloured = !spec.colours.empty();
    if (coloured && spec.colours.size() != N)
        throw std::invalid_argument("scalar_product: |colours| must equal N");
    std::vector<Colour> nonwhite;
    for (Colour c = 1; c <= spec.model.rank; ++c) nonwhite.push_back(c);

    Lattice lat;
    lat.model = spec.model;
    lat.norm = spec.norm;
    for (size_t i = 0; i < N; ++i) {
        Colour in = coloured ? spec.colours[i] : 1;
        if (coloured && in < 1)
            throw std::invalid_argument("scalar_product: colours must be >= 1");
        lat.rows.push_back({spec.xs[i], EdgeCondition::fixed(in), EdgeCondition::fixed(0)});
    }
    for (size_t i = 0; i < m; ++i) {
        EdgeCondition out = coloured ? EdgeCondition::summed(nonwhite) : EdgeCondition::fixed(1);
        lat.rows.push_back({spec.bs[i], EdgeCondition::fixed(0), out});
    }
    // columns y_{N-m+1} .. y_L, then y_1 .. y_{N-m} with black exits on top
    for (size_t j = N - m; j < L; ++j)
        lat.cols.push_back({spec.ys[j], EdgeCondition::fixed(0), EdgeCondition::fixed(0)});
    for (size_t j = 0; j < N - m; ++j) {
        EdgeCondition top = coloured ? EdgeCondition::summed(nonwhite) : EdgeCondition::fixed(1);
        lat.cols.push_back({spec.ys[j], EdgeCondition::fixed(0), top});
    }
    return lat;
}

PartitionValue scalar_product(const Spec& spec, Method method) {
    return evaluate(build(spec), method);
}

PartitionValue coloured_scalar_product(const Spec& spec, Method method) {
    if (spec.colours.empty())
        throw std::invalid_argument("coloured_scalar_product: colours required");
    if (spec.norm != Norm::UnitA)
        throw std::invalid_argument("coloured_scalar_product: unit-a normalization required");
    return evaluate(build(spec), method);
}

Scalar slavnov_kernel(const std::vector<Scalar>& xs, const std::vector<Scalar>& bs,
                      const std::vector<Scalar>& F, const std::vector<Scalar>& G) {
    const size_t N = xs.size();
    if (bs.size() != N || F.size() != N || G.size() != N)
        throw std::invalid_argument("slavnov_kernel: size mismatch");
    Scalar vx = vandermonde(xs), vb = vandermonde(bs, true);
    if (vx.is_zero() || vb.is_zero())
        throw std::invalid_argument("slavnov_kernel: coincident rapidities");
    Matrix k(N, std::vector<Scalar>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Scalar d = bs[j] - xs[i];
            if (d.is_zero()) throw std::invalid_argument("slavnov_kernel: b_j = x_i");
            Scalar plus(1), minus(1);
            for (size_t t = 0; t < N; ++t) {
                if (t == j) continue;
                plus *= bs[t] - xs[i] + Scalar(1);
                minus *= bs[t] - xs[i] - Scalar(1);
            }
            k[i][j] = (plus * F[i] - minus * G[i]) / d;
        }
    return det(k) / (vx * vb);
}

PartitionValue slavnov(const std::vector<Scalar>& xs, const std::vector<Scalar>& bs,
                       const std::vector<Scalar>& ys) {
    const size_t N = xs.size();
    std::vector<Scalar> F(N, Scalar(1)), G(N, Scalar(1));
    for (size_t i = 0; i < N; ++i)
        for (const auto& y : ys) {
            Scalar d = xs[i] - y;
            if ((d + Scalar(1)).is_zero()) throw PoleError("slavnov: x_i - y_k = -1");
            G[i] *= d / (d + Scalar(1));
        }
    Scalar v = slavnov_kernel(xs, bs, F, G);
    return {std::move(v), Provenance::Determinant, ModelKind::Rational, Norm::UnitA};
}

PartitionValue ik_sum(const std::vector<Scalar>& xs, const std::vector<Scalar>& bs,
                      const std::vector<Scalar>& ys) {
    const size_t N = xs.size();
    if (bs.size() != N) throw std::invalid_argument("ik_sum: |bs| must equal |xs|");
    if (ys.size() < N) throw std::invalid_argument("ik_sum: requires L >= N");
    Scalar total(0);
    // subsets by bitmask; the DWPF factors force |x_I| = |b_I|
    for (unsigned long mx = 0; mx < (1ul << N); ++mx) {
        std::vector<Scalar> xI, xII;
        for (size_t i = 0; i < N; ++i) (mx >> i & 1 ? xI : xII).push_back(xs[i]);
        for (unsigned long mb = 0; mb < (1ul << N); ++mb) {
            std::vector<Scalar> bI, bII;
            for (size_t i = 0; i < N; ++i) (mb >> i & 1 ? bI : bII).push_back(bs[i]);
            if (bI.size() != xI.size()) continue;
            Scalar term(1);
            for (const auto& b : bI)
                for (const auto& y : ys) term *= (b - y + Scalar(1)) / (b - y);
            for (const auto& x : xII)
                for (const auto& y : ys) term *= (x - y + Scalar(1)) / (x - y);
            for (const auto& x1 : xI)
                for (const auto& x2 : xII) term *= (x1 - x2 + Scalar(1)) / (x1 - x2);
            for (const auto& b1 : bI)
                for (const auto& b2 : bII) term *= (b2 - b1 + Scalar(1)) / (b2 - b1);
            if (!bII.empty()) term *= dwpf::dwpf_ik_unit_b(bII, xII).value;
            if (!xI.empty()) term *= dwpf::dwpf_ik_unit_b(xI, bI).value;
            total += term;
        }
    }
    return {std::move(total), Provenance::Determinant, ModelKind::Rational, Norm::UnitB};
}

}  // namespace sp
}  // namespace anvm
