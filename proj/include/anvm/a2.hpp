#pragma once

#include "anvm/lattice.hpp"

namespace anvm {

/// A₂ scalar-product lattices (two equivalent layouts), their b→∞
/// degenerations as signed boundary sums and as exact sequential limits,
/// and the resulting determinant factorizations. Everything here is the
/// rational n = 2 model in unit-b normalization.
namespace a2 {

struct Spec {
    std::vector<Scalar> x2s;  // free rapidities, length m
    std::vector<Scalar> x1s;  // free rapidities, length l
    std::vector<Scalar> b1s;  // Bethe-side rapidities, length l
    std::vector<Scalar> b2s;  // Bethe-side rapidities, length m
    std::vector<Scalar> ys;   // fundamental inhomogeneities, length L
    std::vector<Scalar> zs;   // anti-fundamental inhomogeneities, length M

    void validate() const;  // l + m <= L + M and matching lengths
};

enum class Layout { Fig1a, Fig1b };

/// Compiles the chosen layout to a rectangular lattice (bent lines become
/// edge ties, anti-fundamental columns run downward).
Lattice build(const Spec& spec, Layout layout);

/// The two layouts agree; evaluated as the partition function of build().
PartitionValue a2_scalar_product(const Spec& spec, Layout layout = Layout::Fig1a,
                                 Method method = Method::Enumeration);

/// Both evaluations of a b→∞ degeneration. value() checks they agree and
/// returns the signed-sum one.
struct Degeneration {
    Scalar signed_sum;
    Scalar sequential_limit;
    PartitionValue value() const;  // throws VerificationError on disagreement
};

/// (1/m!)·lim_{b⁽²⁾→∞} b⁽²⁾_m…b⁽²⁾_1 · S: (i) signed boundary sum over the
/// degenerate lattice with #(α_k=2)+#(β_k=1)=m and sign (−1)^{#(β_k=1)};
/// (ii) sequential exact limits of the full layout divided by m!.
/// spec.b2s is ignored.
Degeneration degenerate_b2(const Spec& spec, Method method = Method::Enumeration);

/// Mirror degeneration in the b⁽¹⁾ family: colours {0,1}, constraint
/// #(α_k=0)+#(β_k=1)=l, sign (−1)^{#(α_k=0)}, limits divided by l!.
/// spec.b1s is ignored.
Degeneration degenerate_b1(const Spec& spec, Method method = Method::Enumeration);

/// The degenerate lattices themselves (signed-sum side), exposed for the
/// colour-decomposition tests.
Lattice build_degenerate_b2(const Spec& spec);
Lattice build_degenerate_b1(const Spec& spec);

/// Factorized determinant value of the {b⁽²⁾}→∞ degeneration: the unit-b
/// Slavnov determinant over (x1s, b1s; ys) times the partial-type
/// determinant over (x2s; x1s, zs). Valid when b1s solve the fundamental
/// Bethe equations for ys.
PartitionValue fact1(const std::vector<Scalar>& x2s, const std::vector<Scalar>& x1s,
                     const std::vector<Scalar>& b1s, const std::vector<Scalar>& ys,
                     const std::vector<Scalar>& zs);

/// Factorized value of the {b⁽¹⁾}→∞ degeneration: the anti-fundamental
/// Slavnov determinant over (x2s, b2s; zs) times the partial-type
/// determinant over (x1s; ys, x2s). Valid when b2s solve the
/// anti-fundamental Bethe equations for zs.
PartitionValue fact2(const std::vector<Scalar>& x2s, const std::vector<Scalar>& x1s,
                     const std::vector<Scalar>& b2s, const std::vector<Scalar>& ys,
                     const std::vector<Scalar>& zs);

/// Δ⁻¹{x}·det[ x_i^{j−1} Π_{w∈plus}(x_i−w+1)/(x_i−w)
///            − (x_i+1)^{j−1} Π_{w∈minus}(x_i−w−1)/(x_i−w) ].
/// plus = x1s, minus = zs gives the first partial form; plus = ys,
/// minus = x2s the second; minus = {} the plain partial-DWPF determinant.
Scalar partial_det(const std::vector<Scalar>& xs, const std::vector<Scalar>& plus,
                   const std::vector<Scalar>& minus);

/// First factor of fact1 on its own (Slavnov determinant in unit-b).
Scalar fund_slavnov_unit_b(const std::vector<Scalar>& x1s, const std::vector<Scalar>& b1s,
                           const std::vector<Scalar>& ys);

/// First factor of fact2 on its own.
Scalar antifund_slavnov(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                        const std::vector<Scalar>& zs);

/// Fixed-colour right factor of the b⁽²⁾ degeneration: rows x1s (left
/// fixed to iColours, values in {1,2}) and b1s (right summed over {1,2}),
/// columns ys then zs entering with jColours from the top. Equals
/// (−1)^{#(j_k=1)} times the A₁ scalar product S(x1s, b1s | ys) whenever
/// #(i_k=2)+#(j_k=1) = |x2s| would hold in the parent sum.
Lattice build_colour_fixed_b2(const std::vector<Scalar>& x1s, const std::vector<Scalar>& b1s,
                              const std::vector<Scalar>& ys, const std::vector<Scalar>& zs,
                              const std::vector<Colour>& iColours,
                              const std::vector<Colour>& jColours);

/// Fixed-colour left factor of the b⁽¹⁾ degeneration: rows x2s (right
/// fixed to iColours, values {0,1}) and b2s (left summed over {0,1}),
/// columns ys leaving with jColours at the bottom, then zs. Equals
/// (−1)^{#(i_k=0)} times the anti-fundamental scalar product
/// S(x2s, b2s | ∅, zs).
Lattice build_colour_fixed_b1(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                              const std::vector<Scalar>& ys, const std::vector<Scalar>& zs,
                              const std::vector<Colour>& jColours,
                              const std::vector<Colour>& iColours);

/// Anti-fundamental A₁ scalar product S(x2s, b2s | ∅, zs): colours {1,2}
/// with every quantum line anti-fundamental.
Lattice build_antifund_sp(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                          const std::vector<Scalar>& zs);

/// Mixed-quantum-space A₁ scalar products behind the partial-type
/// determinants: S(x2s, b2s | x1s, zs) and S(x1s, b1s | ys, x2s).
Lattice build_mixed_sp_x1z(const std::vector<Scalar>& x2s, const std::vector<Scalar>& b2s,
                           const std::vector<Scalar>& x1s, const std::vector<Scalar>& zs);
Lattice build_mixed_sp_yx2(const std::vector<Scalar>& x1s, const std::vector<Scalar>& b1s,
                           const std::vector<Scalar>& ys, const std::vector<Scalar>& x2s);

/// (1/k!)·lim b_k…b_1·f applied one variable at a time through
/// limit_at_infinity; denomRoots lists the pole locations per variable.
Scalar sequential_limit(const std::function<Scalar(const std::vector<Scalar>&)>& f,
                        const std::vector<std::vector<Scalar>>& denomRoots);

}  // namespace a2
}  // namespace anvm
