#pragma once

#include "anvm/lattice.hpp"

namespace anvm {

/// A₁ scalar products: full, restricted and coloured lattice forms,
/// the Slavnov determinant, and the Izergin–Korepin sum formula.
namespace sp {

struct Spec {
    std::vector<Scalar> xs;       // free rapidities, length N
    std::vector<Scalar> bs;       // restricted set, length m <= N (N for the full product)
    std::vector<Scalar> ys;       // inhomogeneities, length L >= N
    std::vector<Colour> colours;  // optional, values in 1..n, length N
    ModelParams model = ModelParams::rational(1);
    Norm norm = Norm::UnitA;
};

/// The restricted scalar-product lattice. Rows x₁…x_N then b₁…b_m
/// (bottom to top); columns y_{N−m+1}…y_L then y₁…y_{N−m}, the last
/// N−m top edges carrying the exiting black colours.
Lattice build(const Spec& spec);

PartitionValue scalar_product(const Spec& spec, Method method = Method::Enumeration);

/// Coloured variant: lower-left edges fixed to spec.colours, upper-right
/// edges summed over {1..n}. Colour-independent: equals scalar_product.
PartitionValue coloured_scalar_product(const Spec& spec, Method method = Method::Enumeration);

/// Slavnov determinant (valid when bs solve the Bethe equations for ys):
/// Δ⁻¹{x}Δ⁻¹{−b} det[ (1/(b_j−x_i)) (Π_{k≠j}(b_k−x_i+1)
///                    − Π_{k≠j}(b_k−x_i−1) Π_k (x_i−y_k)/(x_i−y_k+1)) ].
/// Unit-a normalization; the caller attests the Bethe property.
PartitionValue slavnov(const std::vector<Scalar>& xs, const std::vector<Scalar>& bs,
                       const std::vector<Scalar>& ys);

/// Generic Slavnov-type kernel
/// Δ⁻¹{x}Δ⁻¹{−b} det[ (1/(b_j−x_i)) (Π_{k≠j}(b_k−x_i+1)·F_i − Π_{k≠j}(b_k−x_i−1)·G_i) ]
/// with per-row factors F, G. Covers the unit-a form (F=1,
/// G=Π(x−y)/(x−y+1)), the unit-b form (F=Π(x−y+1)/(x−y), G=1) and the
/// anti-fundamental unit-b form (F=1, G=Π(x−z−1)/(x−z)).
Scalar slavnov_kernel(const std::vector<Scalar>& xs, const std::vector<Scalar>& bs,
                      const std::vector<Scalar>& F, const std::vector<Scalar>& G);

/// Izergin–Korepin sum form of the full scalar product, unit-b:
/// sum over {x}={x_I}∪{x_II}, {b}={b_I}∪{b_II} with |x_I| = |b_I| of
/// crossing factors times DWPF(b_II|x_II)·DWPF(x_I|b_I).
PartitionValue ik_sum(const std::vector<Scalar>& xs, const std::vector<Scalar>& bs,
                      const std::vector<Scalar>& ys);

}  // namespace sp
}  // namespace anvm
