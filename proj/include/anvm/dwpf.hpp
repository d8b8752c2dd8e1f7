#pragma once

#include "anvm/lattice.hpp"

namespace anvm {

/// Domain-wall and partial domain-wall partition functions.
///
/// Conventions (fixed once): rows carry x₁ (bottom) … x_N (top), columns
/// carry y₁ (left) … y_N (right); black enters every left edge and exits
/// every top edge.
namespace dwpf {

struct Spec {
    std::vector<Scalar> xs;              // horizontal auxiliary rapidities
    std::vector<Scalar> ys;              // vertical quantum rapidities (|ys| >= |xs| for partial)
    std::vector<Colour> colours;         // optional coloured left boundary, values in 1..n
    ModelParams model = ModelParams::rational(1);
    Norm norm = Norm::UnitA;
};

/// The N×N domain-wall lattice (left 1 in, bottom 0 in, top 1 out, right 0 out).
Lattice build(const Spec& spec);

/// Lattice evaluation of the DWPF.
PartitionValue dwpf(const Spec& spec, Method method = Method::Enumeration);

/// Rational determinant evaluation:
/// Π(x_i−y_j) / (Δ{x}Δ{−y}) · det[ 1/((x_i−y_j)(x_i−y_j+1)) ], unit-a.
PartitionValue dwpf_ik(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

/// dwpf_ik re-expressed in the unit-b normalization (used by the sum formula).
PartitionValue dwpf_ik_unit_b(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

/// Trigonometric determinant evaluation with the e^{|y|−|x|} prefactor;
/// Vandermonde factors are sinh-differences.
PartitionValue dwpf_ik_trig(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys,
                            const Scalar& gamma, unsigned prec = BigFloat::kDefaultPrec);

/// Coloured DWPF: left boundary fixed to spec.colours (values in 1..n),
/// top edges summed over {1..n}. Colour-independent: equals dwpf().
PartitionValue coloured_dwpf(const Spec& spec, Method method = Method::Enumeration);

/// Partial DWPF on an N×L grid (N ≤ L), top boundary summed over {0,1};
/// unit-b normalization.
PartitionValue pdwpf(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys,
                     Method method = Method::Enumeration);

/// Determinant form of the partial DWPF:
/// Δ⁻¹{x} · det[ x_i^{j−1} Π_k (x_i−y_k+1)/(x_i−y_k) − (x_i+1)^{j−1} ].
PartitionValue pdwpf_det(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

}  // namespace dwpf
}  // namespace anvm
