#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anvm/scalar.hpp"

namespace anvm {
namespace bethe {

enum class Variant { A1Fundamental, A1AntiFundamental, A2Nested };

/// Residuals are values of the denominator-cleared polynomial forms of the
/// Bethe equations, so they are finite everywhere and "on-shell" is the
/// polynomial identity residual = 0.
///
/// A1Fundamental:      Π_{j≠i}(b_i−b_j+1)Π_k(b_i−y_k) − Π_{j≠i}(b_i−b_j−1)Π_k(b_i−y_k+1)
/// A1AntiFundamental:  Π_{j≠i}(b_i−b_j+1)Π_k(b_i−z_k−1) − Π_{j≠i}(b_i−b_j−1)Π_k(b_i−z_k)
/// A2Nested:           the two coupled families, first the equations for
///                     roots1 then those for roots2.
std::vector<Scalar> residual(Variant variant, const std::vector<Scalar>& ys,
                             const std::vector<Scalar>& zs, const std::vector<Scalar>& roots1,
                             const std::vector<Scalar>& roots2 = {});

struct Solution {
    std::vector<Scalar> roots1;     // fundamental family (or the only family)
    std::vector<Scalar> roots2;     // nested second family
    std::vector<Scalar> residuals;  // cleared-form residuals at the roots
    bool exact = false;             // roots are exact rationals, residuals exactly 0
};

struct System {
    Variant variant;
    std::vector<Scalar> ys, zs;
    int count1 = 0, count2 = 0;
    std::vector<Solution> solutions;
    /// Certified only on the univariate closed-form path: the cleared
    /// polynomial has no admissible finite root.
    bool no_finite_solution = false;
    std::string note;  // attempt statistics for the search path
};

struct SolveConfig {
    std::uint64_t seed = 1;
    int restarts = 200;
    unsigned prec = BigFloat::kDefaultPrec;
    long tol_exp = -160;  // residual tolerance 2^tol_exp for float roots
};

/// Finds admissible root tuples (pairwise distinct within a family, no
/// collision with the quantum rapidities). Single-unknown systems go
/// through exact polynomial expansion (closed form for degree <= 2,
/// Sturm isolation + refinement above); multivariate systems use damped
/// Newton iteration with seeded random restarts and deduplication, and
/// certify only the roots they return.
System solve(Variant variant, const std::vector<Scalar>& ys, const std::vector<Scalar>& zs,
             int count1, int count2 = 0, const SolveConfig& config = {});

}  // namespace bethe
}  // namespace anvm
