#pragma once

#include <optional>
#include <vector>

#include "anvm/scalar.hpp"

namespace anvm {

enum class ModelKind { Rational, Trigonometric };
enum class Norm { UnitA, UnitB };

using Colour = int;  // 0 = white, 1 = black, 2..n extra colours

struct ModelParams {
    ModelKind kind = ModelKind::Rational;
    int rank = 1;  // n >= 1: colours take values in {0,..,n}
    std::optional<Scalar> gamma;  // trig crossing parameter
    unsigned prec = BigFloat::kDefaultPrec;

    void validate() const;
    static ModelParams rational(int n) { return {ModelKind::Rational, n, std::nullopt}; }
    static ModelParams trig(int n, Scalar g, unsigned prec = BigFloat::kDefaultPrec) {
        return {ModelKind::Trigonometric, n, std::move(g), prec};
    }
};

enum class WeightKind { A, BPlus, BMinus, CPlus, CMinus };

/// The six vertex-weight functions a, b±, c± (a₊ = a₋ = a) under a fixed
/// model and normalization.
///
/// unit-a: a ≡ 1 (rational: b = (x−y)/(x−y+1), c = 1/(x−y+1)).
/// unit-b: all b ≡ 1 (rational only: a = (x−y+1)/(x−y), c = 1/(x−y)).
class WeightTable {
  public:
    WeightTable(ModelParams params, Norm norm);

    const ModelParams& params() const { return params_; }
    Norm norm() const { return norm_; }

    /// Evaluates the named weight; throws PoleError at a pole of that weight.
    Scalar weight(WeightKind kind, const Scalar& x, const Scalar& y) const;

    /// True when no weight of this table has a pole at separation x − y.
    bool pole_free(const Scalar& x, const Scalar& y) const;

  private:
    ModelParams params_;
    Norm norm_;
};

/// Matrix element [R_{αβ}(x,y)]^{iα jα}_{iβ jβ}: (iα, jα) act on the
/// horizontal (α) space, (iβ, jβ) on the vertical (β) space. Zero unless
/// {iα, iβ} = {jα, jβ} as multisets.
Scalar r_entry(const WeightTable& table, const Scalar& x, const Scalar& y, Colour ia, Colour ja,
               Colour ib, Colour jb);

/// Nonzero entries of R as (iα, jα, iβ, jβ, kind); there are (n+1)(2n+1).
std::vector<std::tuple<Colour, Colour, Colour, Colour, WeightKind>> r_nonzero_entries(int rank);

/// Maximum absolute entrywise difference of the two sides of the
/// Yang–Baxter equation on the (n+1)³-dimensional triple tensor space.
/// Exactly zero in rational mode.
Scalar ybe_residual(const WeightTable& table, const Scalar& x, const Scalar& y, const Scalar& z);

}  // namespace anvm
