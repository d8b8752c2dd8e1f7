#include "anvm/model.hpp"

#include <tuple>

namespace anvm {

void ModelParams::validate() const {
    if (rank < 1) throw std::invalid_argument("ModelParams: rank must be >= 1");
    if (kind == ModelKind::Rational && gamma)
        throw std::invalid_argument("ModelParams: rational model carries no gamma");
    if (kind == ModelKind::Trigonometric && !gamma)
        throw std::invalid_argument("ModelParams: trigonometric model requires gamma");
}

WeightTable::WeightTable(ModelParams params, Norm norm) : params_(std::move(params)), norm_(norm) {
    params_.validate();
    if (params_.kind == ModelKind::Trigonometric && norm_ == Norm::UnitB)
        throw std::invalid_argument("WeightTable: unit-b normalization is defined for the rational model only");
}

Scalar WeightTable::weight(WeightKind kind, const Scalar& x, const Scalar& y) const {
    const Scalar d = x - y;
    if (params_.kind == ModelKind::Rational) {
        if (norm_ == Norm::UnitA) {
            const Scalar dp1 = d + Scalar(1);
            switch (kind) {
                case WeightKind::A: return Scalar(1);
                case WeightKind::BPlus:
                case WeightKind::BMinus:
                    if (dp1.is_zero()) throw PoleError("b weight pole at x - y = -1");
                    return d / dp1;
                case WeightKind::CPlus:
                case WeightKind::CMinus:
                    if (dp1.is_zero()) throw PoleError("c weight pole at x - y = -1");
                    return Scalar(1) / dp1;
            }
        } else {
            switch (kind) {
                case WeightKind::A:
                    if (d.is_zero()) throw PoleError("a weight pole at x = y (unit-b)");
                    return (d + Scalar(1)) / d;
                case WeightKind::BPlus:
                case WeightKind::BMinus: return Scalar(1);
                case WeightKind::CPlus:
                case WeightKind::CMinus:
                    if (d.is_zero()) throw PoleError("c weight pole at x = y (unit-b)");
                    return Scalar(1) / d;
            }
        }
    } else {
        const unsigned prec = params_.prec;
        const Scalar g = *params_.gamma;
        const Scalar shg = sinh(d + g, prec);
        switch (kind) {
            case WeightKind::A: return Scalar(BigFloat(1L, prec));
            case WeightKind::BPlus:
            case WeightKind::BMinus: {
                if (shg.is_zero()) throw PoleError("trig b weight pole at [x - y + gamma] = 0");
                const Scalar e = exp(kind == WeightKind::BPlus ? -g : g, prec);
                return e * sinh(d, prec) / shg;
            }
            case WeightKind::CPlus:
            case WeightKind::CMinus: {
                if (shg.is_zero()) throw PoleError("trig c weight pole at [x - y + gamma] = 0");
                const Scalar e = exp(kind == WeightKind::CPlus ? d : -d, prec);
                return e * sinh(g, prec) / shg;
            }
        }
    }
    throw std::logic_error("unreachable");
}

bool WeightTable::pole_free(const Scalar& x, const Scalar& y) const {
    const Scalar d = x - y;
    if (params_.kind == ModelKind::Rational)
        return norm_ == Norm::UnitA ? !(d + Scalar(1)).is_zero() : !d.is_zero();
    return !sinh(d + *params_.gamma, params_.prec).is_zero();
}

Scalar r_entry(const WeightTable& table, const Scalar& x, const Scalar& y, Colour ia, Colour ja,
               Colour ib, Colour jb) {
    const int n = table.params().rank;
    for (Colour c : {ia, ja, ib, jb})
        if (c < 0 || c > n) throw std::invalid_argument("r_entry: colour out of range");
    if (ia == ja && ib == jb) {
        if (ia == ib) return table.weight(WeightKind::A, x, y);
        return table.weight(ia < ib ? WeightKind::BPlus : WeightKind::BMinus, x, y);
    }
    if (ia == jb && ja == ib)
        return table.weight(ia < ja ? WeightKind::CPlus : WeightKind::CMinus, x, y);
    return Scalar(0);
}

std::vector<std::tuple<Colour, Colour, Colour, Colour, WeightKind>> r_nonzero_entries(int rank) {
    std::vector<std::tuple<Colour, Colour, Colour, Colour, WeightKind>> out;
    for (Colour i = 0; i <= rank; ++i) out.emplace_back(i, i, i, i, WeightKind::A);
    for (Colour i = 0; i <= rank; ++i)
        for (Colour j = i + 1; j <= rank; ++j) {
            out.emplace_back(i, i, j, j, WeightKind::BPlus);
            out.emplace_back(j, j, i, i, WeightKind::BMinus);
            out.emplace_back(i, j, j, i, WeightKind::CPlus);
            out.emplace_back(j, i, i, j, WeightKind::CMinus);
        }
    return out;
}

namespace {

// R acting on spaces (s, t) of the triple tensor product, as a sparse map
// applied to a dense coefficient vector. Basis index: i1*(n+1)^2 + i2*(n+1) + i3,
// matrix element row (iα, iβ), column (jα, jβ).
struct SparseR {
    int n, s, t;
    std::vector<std::tuple<Colour, Colour, Colour, Colour, Scalar>> entries;  // (ia, ja, ib, jb, w)

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        const int d = n + 1;
        const int dim = d * d * d;
        int stride[3] = {d * d, d, 1};
        std::vector<Scalar> out(dim, Scalar(0));
        for (int in = 0; in < dim; ++in) {
            if (v[in].is_zero()) continue;
            int idx[3] = {in / (d * d), (in / d) % d, in % d};
            for (const auto& [ia, ja, ib, jb, w] : entries) {
                if (idx[s] != ja || idx[t] != jb) continue;
                int o = in + (ia - ja) * stride[s] + (ib - jb) * stride[t];
                out[o] += w * v[in];
            }
        }
        return out;
    }
};

SparseR make_sparse(const WeightTable& table, const Scalar& x, const Scalar& y, int s, int t) {
    SparseR r{table.params().rank, s, t, {}};
    for (const auto& [ia, ja, ib, jb, kind] : r_nonzero_entries(r.n))
        r.entries.emplace_back(ia, ja, ib, jb, table.weight(kind, x, y));
    return r;
}

}  // namespace

Scalar ybe_residual(const WeightTable& table, const Scalar& x, const Scalar& y, const Scalar& z) {
    const int n = table.params().rank;
    const int dim = (n + 1) * (n + 1) * (n + 1);
    SparseR rab = make_sparse(table, x, y, 0, 1);
    SparseR rac = make_sparse(table, x, z, 0, 2);
    SparseR rbc = make_sparse(table, y, z, 1, 2);
    Scalar worst(0);
    for (int col = 0; col < dim; ++col) {
        std::vector<Scalar> e(dim, Scalar(0));
        e[col] = Scalar(1);
        // lhs = R_ab R_ac R_bc e, rhs = R_bc R_ac R_ab e
        auto lhs = rab.apply(rac.apply(rbc.apply(e)));
        auto rhs = rbc.apply(rac.apply(rab.apply(e)));
        for (int row = 0; row < dim; ++row) {
            Scalar d = (lhs[row] - rhs[row]).abs();
            if (worst < d) worst = d;
        }
    }
    return worst;
}

}  // namespace anvm
