#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anvm/model.hpp"

namespace anvm {

/// End of a lattice line; where a boundary condition attaches.
struct EdgeRef {
    enum class Side { RowLeft, RowRight, ColBottom, ColTop };
    Side side;
    int index;
    bool operator==(const EdgeRef&) const = default;
    bool operator<(const EdgeRef& o) const {
        return side != o.side ? side < o.side : index < o.index;
    }
};

/// Boundary condition on one external edge: a fixed colour, or a
/// weighted sum over colours (a plain summed edge has all coefficients 1).
struct EdgeCondition {
    static EdgeCondition fixed(Colour c) { return {true, c, {}}; }
    static EdgeCondition summed(std::vector<Colour> colours) {
        EdgeCondition e{false, 0, {}};
        for (Colour c : colours) e.weights.emplace_back(c, Scalar(1));
        return e;
    }
    static EdgeCondition weighted(std::vector<std::pair<Colour, Scalar>> w) {
        return {false, 0, std::move(w)};
    }

    bool is_fixed = true;
    Colour colour = 0;
    std::vector<std::pair<Colour, Scalar>> weights;  // support of the sum
};

/// Cardinality constraint over two groups of weighted edges:
///   #(groupA edge = colourA) + #(groupB edge = colourB) == target,
/// with an optional multiplicative sign (−1)^count on one group.
struct SignedCountConstraint {
    std::vector<EdgeRef> group_a;
    Colour colour_a = 0;
    std::vector<EdgeRef> group_b;
    Colour colour_b = 0;
    int target = 0;
    enum class SignOn { None, GroupA, GroupB } sign = SignOn::None;
};

/// Oriented grid of R-vertices. Rows run left to right carrying auxiliary
/// rapidities; columns run bottom to top (fundamental) or top to bottom
/// (anti-fundamental, weights taken at negated arguments with the quantum
/// indices transposed). A cell may be inactive where the figure's lines do
/// not cross; bent lines are expressed as a tie identifying two external
/// edges, summed over the common colour.
struct Lattice {
    struct Row {
        Scalar rapidity;
        EdgeCondition left, right;
    };
    struct Col {
        Scalar rapidity;
        EdgeCondition bottom, top;
        bool antifund = false;
    };

    ModelParams model;
    Norm norm = Norm::UnitA;
    std::vector<Row> rows;  // bottom to top
    std::vector<Col> cols;  // left to right
    /// active[r][c]; empty means fully active.
    std::vector<std::vector<bool>> active;
    std::vector<std::pair<EdgeRef, EdgeRef>> ties;
    std::optional<SignedCountConstraint> constraint;

    bool is_active(size_t r, size_t c) const {
        return active.empty() ? true : active[r][c];
    }
    WeightTable table() const { return WeightTable(model, norm); }
    /// Throws PoleError if any active cell sits on a weight pole.
    void validate() const;
    /// Rapidities of the lines crossing the given line; in unit-b these
    /// are exactly the denominator roots of the partition function as a
    /// function of that line's rapidity.
    std::vector<Scalar> crossing_rapidities(const EdgeRef::Side rowOrCol, int index) const;
    /// Π over active cells of the unit-b/unit-a weight ratio,
    /// (x−y+1)/(x−y) per fundamental crossing and (x−z−1)/(x−z) per
    /// anti-fundamental one.
    Scalar crossing_factor() const;
};

enum class Provenance { Enumeration, FrontierDP, Determinant, Limit };
std::string to_string(Provenance p);

struct PartitionValue {
    Scalar value;
    Provenance provenance;
    ModelKind model;
    Norm norm;
};

enum class Method { Enumeration, FrontierDP };

/// Partition function of the lattice: sum over internal colourings of
/// products of vertex weights, with weighted boundary edges summed and
/// the global constraint (if any) applied by assignment enumeration.
PartitionValue evaluate(const Lattice& lat, Method method);

/// Convenience for all-Fixed boundaries (colour-violating boundaries
/// give 0, not an error).
PartitionValue evaluate_fixed(const Lattice& lat, Method method = Method::Enumeration);

/// evaluate() with both methods, insisting on agreement (exact in
/// rational mode). Returns the enumeration-tagged value.
PartitionValue evaluate_checked(const Lattice& lat);

/// The Fig. "all boundaries flow out freely" lattice: left and bottom
/// fixed to the given colours, top and right summed over all colours.
/// By the weight identity its value is exactly 1 (unit-a only).
PartitionValue trivial_pf(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys,
                          const std::vector<Colour>& leftColours,
                          const std::vector<Colour>& bottomColours, const ModelParams& params,
                          Method method = Method::FrontierDP);

}  // namespace anvm
