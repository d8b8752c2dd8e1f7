#include "anvm/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "anvm/a2.hpp"
#include "anvm/bethe.hpp"
#include "anvm/dwpf.hpp"
#include "anvm/polynomial.hpp"
#include "anvm/scalar_product.hpp"

namespace anvm {
namespace verify {

namespace {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}

    Scalar rational(long lo, long hi, long maxden = 4) {
        std::uniform_int_distribution<long> den(1, maxden);
        long d = den(g);
        std::uniform_int_distribution<long> num(lo * d, hi * d);
        return Scalar(num(g), d);
    }

    /// k pairwise-distinct rationals in [lo, hi].
    std::vector<Scalar> distinct(int k, long lo, long hi, long maxden = 4) {
        std::vector<Scalar> v;
        while (static_cast<int>(v.size()) < k) {
            Scalar c = rational(lo, hi, maxden);
            bool dup = false;
            for (const auto& x : v) dup |= (x == c);
            if (!dup) v.push_back(c);
        }
        return v;
    }
};

std::string scalar_str(const Scalar& s) { return s.to_string(); }

void check(SuiteResult& out, const std::string& id, bool pass, const std::string& detail = "") {
    out.cases.push_back({id, pass, detail});
}

bool below_pow2(const Scalar& v, long e) {
    return v.abs().to_float(BigFloat::kDefaultPrec) < BigFloat::pow2(e);
}

// ---- criterion 1 ----
SuiteResult suite_ybe(const Options& opts) {
    SuiteResult out{"ybe", {}};
    Rng rng(opts.seed);
    for (int n = 1; n <= 3; ++n) {
        WeightTable t(ModelParams::rational(n), Norm::UnitA);
        bool all_zero = true;
        std::string bad;
        for (int it = 0; it < 100; ++it) {
            auto v = rng.distinct(3, -12, 12, 3);
            // keep pairwise differences away from the b/c pole at -1
            bool pole = false;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j && (v[i] - v[j] + Scalar(1)).is_zero()) pole = true;
            if (pole) {
                --it;
                continue;
            }
            Scalar r = ybe_residual(t, v[0], v[1], v[2]);
            if (!r.is_zero()) {
                all_zero = false;
                bad = "(" + scalar_str(v[0]) + "," + scalar_str(v[1]) + "," + scalar_str(v[2]) + ")";
                break;
            }
        }
        check(out, "ybe-rational-n" + std::to_string(n), all_zero,
              all_zero ? "100 random triples, residual exactly 0" : "failed at " + bad);
    }
    for (int n = 1; n <= 2; ++n) {
        Scalar gamma(1, 2);
        WeightTable t(ModelParams::trig(n, gamma), Norm::UnitA);
        bool ok = true;
        for (int it = 0; it < 20; ++it) {
            auto v = rng.distinct(3, -4, 4, 3);
            bool pole = false;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j && (v[i] - v[j] + gamma).is_zero()) pole = true;
            if (pole) {
                --it;
                continue;
            }
            Scalar r = ybe_residual(t, v[0], v[1], v[2]);
            ok &= below_pow2(r, -200);
        }
        check(out, "ybe-trig-n" + std::to_string(n), ok, "20 triples, residual < 2^-200 at 256 bits");
    }
    return out;
}

// ---- criterion 2 ----
SuiteResult suite_weight_identity(const Options& opts) {
    SuiteResult out{"weight-identity", {}};
    Rng rng(opts.seed + 1);
    WeightTable rat(ModelParams::rational(1), Norm::UnitA);
    bool ok = true;
    for (int it = 0; it < 100; ++it) {
        auto v = rng.distinct(2, -20, 20, 5);
        if ((v[0] - v[1] + Scalar(1)).is_zero()) {
            --it;
            continue;
        }
        Scalar a = rat.weight(WeightKind::A, v[0], v[1]);
        ok &= (a - rat.weight(WeightKind::BPlus, v[0], v[1]) - rat.weight(WeightKind::CPlus, v[0], v[1]))
                  .is_zero();
        ok &= (a - rat.weight(WeightKind::BMinus, v[0], v[1]) - rat.weight(WeightKind::CMinus, v[0], v[1]))
                  .is_zero();
    }
    check(out, "wt-id-rational", ok, "a = b± + c± exactly at 100 random points");
    WeightTable trig(ModelParams::trig(1, Scalar(1, 3)), Norm::UnitA);
    ok = true;
    for (int it = 0; it < 100; ++it) {
        auto v = rng.distinct(2, -6, 6, 4);
        if ((v[0] - v[1] + Scalar(1, 3)).is_zero()) {
            --it;
            continue;
        }
        Scalar a = trig.weight(WeightKind::A, v[0], v[1]);
        Scalar d1 = a - trig.weight(WeightKind::BPlus, v[0], v[1]) - trig.weight(WeightKind::CPlus, v[0], v[1]);
        Scalar d2 = a - trig.weight(WeightKind::BMinus, v[0], v[1]) - trig.weight(WeightKind::CMinus, v[0], v[1]);
        ok &= below_pow2(d1, -200) && below_pow2(d2, -200);
    }
    check(out, "wt-id-trig", ok, "identity within 2^-200 at 256 bits, 100 random points");
    return out;
}

// random pole-free DWPF rapidities: xs high, ys low
std::pair<std::vector<Scalar>, std::vector<Scalar>> dwpf_point(Rng& rng, int N, int L = -1) {
    if (L < 0) L = N;
    return {rng.distinct(N, 20, 34, 3), rng.distinct(L, 0, 12, 3)};
}

// ---- criterion 3 ----
SuiteResult suite_dwpf_ik(const Options& opts) {
    SuiteResult out{"dwpf-ik", {}};
    Rng rng(opts.seed + 2);
    {
        std::vector<Scalar> xs{Scalar(2), Scalar(3)}, ys{Scalar(0), Scalar(1)};
        Scalar v = dwpf::dwpf_ik(xs, ys).value;
        Scalar e = dwpf::dwpf({xs, ys}).value;
        check(out, "dwpf-fixed-instance", v == Scalar(1, 6) && e == Scalar(1, 6),
              "Z({2,3}|{0,1}) = " + scalar_str(v) + " by determinant, " + scalar_str(e) +
                  " by enumeration");
    }
    for (int N = 1; N <= 4; ++N) {
        bool ok = true;
        for (int it = 0; it < 10; ++it) {
            auto [xs, ys] = dwpf_point(rng, N);
            ok &= dwpf::dwpf_ik(xs, ys).value == dwpf::dwpf({xs, ys}).value;
        }
        check(out, "dwpf-ik-rational-N" + std::to_string(N), ok,
              "determinant = enumeration exactly, 10 random points");
    }
    Scalar gamma(1, 2);
    for (int N = 1; N <= 3; ++N) {
        bool ok = true;
        for (int it = 0; it < 10; ++it) {
            auto [xs, ys] = dwpf_point(rng, N);
            dwpf::Spec spec{xs, ys, {}, ModelParams::trig(1, gamma), Norm::UnitA};
            Scalar lhs = dwpf::dwpf_ik_trig(xs, ys, gamma).value;
            Scalar rhs = dwpf::dwpf(spec).value;
            ok &= below_pow2(lhs - rhs, -200);
        }
        check(out, "dwpf-ik-trig-N" + std::to_string(N), ok,
              "trig determinant = enumeration within 2^-200, 10 random points");
    }
    return out;
}

// ---- criterion 4 ----
SuiteResult suite_dwpf_properties(const Options& opts) {
    SuiteResult out{"dwpf-properties", {}};
    Rng rng(opts.seed + 3);
    // A: Z·Π(x_i−y_j+1) is polynomial of degree ≤ N−1 in x_N
    for (int N = 2; N <= 4; ++N) {
        auto [xs, ys] = dwpf_point(rng, N);
        auto F = [&](const Scalar& t) {
            std::vector<Scalar> x2 = xs;
            x2[N - 1] = t;
            Scalar z = dwpf::dwpf({x2, ys}).value;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) z *= x2[i] - ys[j] + Scalar(1);
            return z;
        };
        std::vector<std::pair<Scalar, Scalar>> pts;
        for (int k = 0; k <= N + 1; ++k) pts.emplace_back(Scalar(50 + 3 * k), F(Scalar(50 + 3 * k)));
        Polynomial p = interpolate(pts);
        bool ok = p.degree() <= N - 1;
        check(out, "dwpf-property-A-N" + std::to_string(N), ok,
              "numerator degree " + std::to_string(p.degree()) + " <= N-1 in x_N");
    }
    // B: symmetry under y transpositions (and one full shuffle)
    for (int N = 2; N <= 4; ++N) {
        auto [xs, ys] = dwpf_point(rng, N);
        Scalar base = dwpf::dwpf({xs, ys}).value;
        bool ok = true;
        for (int j = 0; j + 1 < N; ++j) {
            auto y2 = ys;
            std::swap(y2[j], y2[j + 1]);
            ok &= dwpf::dwpf({xs, y2}).value == base;
        }
        auto y3 = ys;
        std::reverse(y3.begin(), y3.end());
        ok &= dwpf::dwpf({xs, y3}).value == base;
        check(out, "dwpf-property-B-N" + std::to_string(N), ok, "invariant under y permutations");
    }
    // C: recursion at x_N = y_N
    for (int N = 2; N <= 4; ++N) {
        auto [xs, ys] = dwpf_point(rng, N);
        xs[N - 1] = ys[N - 1];
        std::vector<Scalar> xr(xs.begin(), xs.end() - 1), yr(ys.begin(), ys.end() - 1);
        bool ok = dwpf::dwpf({xs, ys}).value == dwpf::dwpf({xr, yr}).value;
        check(out, "dwpf-property-C-N" + std::to_string(N), ok, "Z|_{x_N=y_N} = Z_{N-1}");
    }
    // D: 1×1 case
    {
        auto [xs, ys] = dwpf_point(rng, 1);
        WeightTable t(ModelParams::rational(1), Norm::UnitA);
        bool ok = dwpf::dwpf({xs, ys}).value == t.weight(WeightKind::CMinus, xs[0], ys[0]);
        check(out, "dwpf-property-D", ok, "Z(x|y) = c_-(x,y)");
    }
    return out;
}

// ---- criterion 5 ----
SuiteResult suite_lemma1(const Options& opts) {
    SuiteResult out{"lemma1", {}};
    Rng rng(opts.seed + 4);
    const int rank = opts.rank ? opts.rank : 2;
    const int maxSize = opts.max_size ? opts.max_size : 3;
    ModelParams params = ModelParams::rational(rank);
    for (int M = 1; M <= maxSize; ++M)
        for (int N = 1; N <= maxSize; ++N) {
            bool ok = true;
            long cases = 0;
            for (int rep = 0; rep < 3 && ok; ++rep) {
                auto xs = rng.distinct(M, 20, 34, 3);
                auto ys = rng.distinct(N, 0, 12, 3);
                std::vector<Colour> left(M, 0), bottom(N, 0);
                std::function<void(int)> loop = [&](int pos) {
                    if (!ok) return;
                    if (pos == M + N) {
                        ++cases;
                        ok &= trivial_pf(xs, ys, left, bottom, params).value == Scalar(1);
                        return;
                    }
                    for (Colour c = 0; c <= rank && ok; ++c) {
                        (pos < M ? left[pos] : bottom[pos - M]) = c;
                        loop(pos + 1);
                    }
                };
                loop(0);
            }
            check(out, "lemma1-" + std::to_string(M) + "x" + std::to_string(N), ok,
                  std::to_string(cases) + " boundary assignments, all with value 1/1");
        }
    return out;
}

// ---- criterion 6 ----
SuiteResult suite_lemma2(const Options& opts) {
    SuiteResult out{"lemma2", {}};
    Rng rng(opts.seed + 5);
    const int rank = opts.rank ? opts.rank : 2;
    for (int N = 1; N <= 3; ++N) {
        bool ok = true;
        long cases = 0;
        for (int rep = 0; rep < 5 && ok; ++rep) {
            auto [xs, ys] = dwpf_point(rng, N);
            Scalar plain = dwpf::dwpf({xs, ys, {}, ModelParams::rational(rank)}).value;
            std::vector<Colour> colours(N, 1);
            std::function<void(int)> loop = [&](int pos) {
                if (!ok) return;
                if (pos == N) {
                    ++cases;
                    dwpf::Spec spec{xs, ys, colours, ModelParams::rational(rank), Norm::UnitA};
                    ok &= dwpf::coloured_dwpf(spec).value == plain;
                    return;
                }
                for (Colour c = 1; c <= rank && ok; ++c) {
                    colours[pos] = c;
                    loop(pos + 1);
                }
            };
            loop(0);
        }
        check(out, "lemma2-N" + std::to_string(N), ok,
              std::to_string(cases) + " colour vectors over 5 rapidity sets, all equal to the DWPF");
    }
    return out;
}

// ---- criterion 7 ----
SuiteResult suite_lemma3(const Options& opts) {
    SuiteResult out{"lemma3", {}};
    Rng rng(opts.seed + 6);
    const int rank = opts.rank ? opts.rank : 2;
    for (int N = 1; N <= 2; ++N)
        for (int L = N; L <= 4; ++L)
            for (int m = 0; m <= N; ++m) {
                bool ok = true;
                long cases = 0;
                for (int rep = 0; rep < 5 && ok; ++rep) {
                    auto xs = rng.distinct(N, 20, 34, 3);
                    auto bs_full = rng.distinct(N, 40, 54, 3);
                    std::vector<Scalar> bs(bs_full.begin(), bs_full.begin() + m);
                    auto ys = rng.distinct(L, 0, 12, 3);
                    sp::Spec plain{xs, bs, ys, {}, ModelParams::rational(rank), Norm::UnitA};
                    Scalar base = sp::scalar_product(plain).value;
                    std::vector<Colour> colours(N, 1);
                    std::function<void(int)> loop = [&](int pos) {
                        if (!ok) return;
                        if (pos == N) {
                            ++cases;
                            sp::Spec cs{xs, bs, ys, colours, ModelParams::rational(rank), Norm::UnitA};
                            ok &= sp::coloured_scalar_product(cs).value == base;
                            return;
                        }
                        for (Colour c = 1; c <= rank && ok; ++c) {
                            colours[pos] = c;
                            loop(pos + 1);
                        }
                    };
                    loop(0);
                }
                check(out,
                      "lemma3-N" + std::to_string(N) + "-L" + std::to_string(L) + "-m" +
                          std::to_string(m),
                      ok, std::to_string(cases) + " colour vectors, coloured = uncoloured");
            }
    return out;
}

// ---- criterion 8 ----
SuiteResult suite_slavnov(const Options& opts) {
    SuiteResult out{"slavnov", {}};
    {
        std::vector<Scalar> ys{Scalar(0), Scalar(2)};
        auto sys = bethe::solve(bethe::Variant::A1Fundamental, ys, {}, 1);
        bool root_ok = sys.solutions.size() == 1 && sys.solutions[0].exact &&
                       sys.solutions[0].roots1[0] == Scalar(1, 2);
        check(out, "slavnov-N1-bethe-root", root_ok,
              "y={0,2}: unique Bethe root b = " +
                  (sys.solutions.empty() ? std::string("(none)")
                                         : scalar_str(sys.solutions[0].roots1[0])));
        std::vector<Scalar> xs{Scalar(3)}, bs{Scalar(1, 2)};
        Scalar slav = sp::slavnov(xs, bs, ys).value;
        Scalar enums = sp::scalar_product({xs, bs, ys}).value;
        check(out, "slavnov-N1-on-shell", slav == Scalar(-1, 4) && enums == Scalar(-1, 4),
              "slavnov = enumeration = " + scalar_str(slav));
        // off-shell the determinant does not reproduce the lattice value
        Scalar off = sp::slavnov(xs, {Scalar(4)}, ys).value;
        Scalar offEnum = sp::scalar_product({xs, {Scalar(4)}, ys}).value;
        check(out, "slavnov-off-shell-differs", off != offEnum && offEnum == Scalar(19, 120),
              "off-shell b=4: determinant " + scalar_str(off) + " != lattice " +
                  scalar_str(offEnum));
    }
    {
        // an N = 2 system whose only admissible solution is irrational
        std::vector<Scalar> ys{Scalar(0), Scalar(3), Scalar(5), Scalar(7)};
        bethe::SolveConfig cfg;
        cfg.seed = opts.seed + 100;
        cfg.restarts = 400;
        auto sys = bethe::solve(bethe::Variant::A1Fundamental, ys, {}, 2, 0, cfg);
        const bethe::Solution* irr = nullptr;
        for (const auto& s : sys.solutions)
            if (!s.exact) irr = &s;
        bool found = irr != nullptr;
        check(out, "slavnov-N2-irrational-roots", found,
              found ? "roots b = (" + scalar_str(irr->roots1[0]) + ", " + scalar_str(irr->roots1[1]) + ")"
                    : "solver found no irrational solution");
        if (found) {
            bool res_ok = true;
            for (const auto& r : irr->residuals) res_ok &= below_pow2(r, -150);
            check(out, "slavnov-N2-residuals", res_ok, "cleared residuals < 2^-150 at 256 bits");
            std::vector<Scalar> xs{Scalar(20), Scalar(45, 2)};
            Scalar slav = sp::slavnov(xs, irr->roots1, ys).value;
            Scalar enums = sp::scalar_product({xs, irr->roots1, ys}).value;
            check(out, "slavnov-N2-on-shell", below_pow2(slav - enums, -150),
                  "|slavnov - enumeration| < 2^-150 at 256 bits");
        }
    }
    return out;
}

// ---- criterion 9 ----
SuiteResult suite_appendix(const Options& opts) {
    SuiteResult out{"appendix", {}};
    Rng rng(opts.seed + 7);
    {
        std::vector<Scalar> xs{Scalar(3)}, ys{Scalar(0), Scalar(1)};
        Scalar lhs = dwpf::pdwpf(xs, ys).value;
        Scalar rhs = dwpf::pdwpf_det(xs, ys).value;
        check(out, "pdwpf-fixed-instance", lhs == Scalar(1) && rhs == Scalar(1),
              "Z(3|{0,1}) = " + scalar_str(lhs) + " = " + scalar_str(rhs));
    }
    for (int N = 1; N <= 3; ++N)
        for (int L = N; L <= 5; ++L) {
            bool ok = true;
            for (int it = 0; it < 10; ++it) {
                auto [xs, ys] = dwpf_point(rng, N, L);
                ok &= dwpf::pdwpf(xs, ys).value == dwpf::pdwpf_det(xs, ys).value;
            }
            check(out, "pdwpf-N" + std::to_string(N) + "-L" + std::to_string(L), ok,
                  "lattice = determinant exactly, 10 random points");
        }
    {
        std::vector<Scalar> xs{Scalar(3)}, bs{Scalar(4)}, ys{Scalar(0), Scalar(2)};
        Scalar v = sp::ik_sum(xs, bs, ys).value;
        sp::Spec spec{xs, bs, ys, {}, ModelParams::rational(1), Norm::UnitB};
        Scalar e = sp::scalar_product(spec).value;
        check(out, "ik-sum-fixed-instance", v == Scalar(19, 24) && e == Scalar(19, 24),
              "S(3,4|{0,2}) = " + scalar_str(v) + " in unit-b");
    }
    for (int N = 1; N <= 2; ++N)
        for (int L = N; L <= 3; ++L) {
            bool ok = true;
            for (int it = 0; it < 5; ++it) {
                auto xs = rng.distinct(N, 20, 34, 3);
                auto bs = rng.distinct(N, 40, 54, 3);
                auto ys = rng.distinct(L, 0, 12, 3);
                sp::Spec spec{xs, bs, ys, {}, ModelParams::rational(1), Norm::UnitB};
                ok &= sp::ik_sum(xs, bs, ys).value == sp::scalar_product(spec).value;
            }
            check(out, "ik-sum-N" + std::to_string(N) + "-L" + std::to_string(L), ok,
                  "sum formula = lattice exactly, 5 random points");
        }
    return out;
}

a2::Spec random_a2_spec(Rng& rng, int l, int m, int L, int M) {
    a2::Spec s;
    s.x2s = rng.distinct(m, 60, 74, 2);
    s.x1s = rng.distinct(l, 40, 54, 2);
    s.b1s = rng.distinct(l, 80, 94, 2);
    s.b2s = rng.distinct(m, 100, 114, 2);
    s.ys = rng.distinct(L, 0, 12, 2);
    s.zs = rng.distinct(M, 20, 32, 2);
    return s;
}

// ---- criterion 10 ----
SuiteResult suite_a2_degeneration(const Options& opts) {
    SuiteResult out{"a2-degeneration", {}};
    Rng rng(opts.seed + 8);
    for (int l = 0; l <= 1; ++l)
        for (int m = 0; m <= 1; ++m)
            for (int L = 0; L <= 2; ++L)
                for (int M = 0; M <= 1; ++M) {
                    if (l + m > L + M) continue;
                    bool layout_ok = true, deg2_ok = true, deg1_ok = true;
                    for (int rep = 0; rep < 5; ++rep) {
                        a2::Spec s = random_a2_spec(rng, l, m, L, M);
                        Scalar va = a2::a2_scalar_product(s, a2::Layout::Fig1a).value;
                        Scalar vb = a2::a2_scalar_product(s, a2::Layout::Fig1b).value;
                        layout_ok &= va == vb;
                        auto d2 = a2::degenerate_b2(s);
                        deg2_ok &= d2.signed_sum == d2.sequential_limit;
                        auto d1 = a2::degenerate_b1(s);
                        deg1_ok &= d1.signed_sum == d1.sequential_limit;
                    }
                    std::string tag = "l" + std::to_string(l) + "m" + std::to_string(m) + "L" +
                                      std::to_string(L) + "M" + std::to_string(M);
                    check(out, "a2-layouts-" + tag, layout_ok, "fig1a = fig1b, 5 random specs");
                    check(out, "a2-deg-b2-" + tag, deg2_ok, "signed sum = sequential limit / m!");
                    check(out, "a2-deg-b1-" + tag, deg1_ok, "signed sum = sequential limit / l!");
                }
    return out;
}

// ---- criterion 11 ----
SuiteResult suite_factorization(const Options&) {
    SuiteResult out{"factorization", {}};
    {
        a2::Spec s;
        s.x1s = {Scalar(3)};
        s.x2s = {Scalar(4)};
        s.b1s = {Scalar(1, 2)};  // on-shell for y = {0, 2}
        s.ys = {Scalar(0), Scalar(2)};
        s.zs = {Scalar(7)};
        auto deg = a2::degenerate_b2(s);
        Scalar f1 = a2::fact1(s.x2s, s.x1s, s.b1s, s.ys, s.zs).value;
        bool ok = deg.signed_sum == Scalar(-4, 9) && deg.sequential_limit == Scalar(-4, 9) &&
                  f1 == Scalar(-4, 9);
        check(out, "fact1-pinned-instance", ok,
              "signed sum " + scalar_str(deg.signed_sum) + ", limit " +
                  scalar_str(deg.sequential_limit) + ", fact1 " + scalar_str(f1) +
                  " (all must be -4/9)");
        // factor structure of the same instance
        Scalar first = a2::fund_slavnov_unit_b(s.x1s, s.b1s, s.ys);
        check(out, "fact1-first-factor", first == Scalar(-2, 3),
              "unit-b Slavnov factor = " + scalar_str(first));
        Scalar second = a2::partial_det(s.x2s, s.x1s, s.zs);
        check(out, "fact1-second-factor", second == Scalar(2, 3),
              "partial determinant factor = " + scalar_str(second));
    }
    {
        // anti-fundamental side: z = {5, 8} has the on-shell root b2 = 7
        std::vector<Scalar> zs{Scalar(5), Scalar(8)};
        auto sys = bethe::solve(bethe::Variant::A1AntiFundamental, {}, zs, 1);
        bool root_ok = sys.solutions.size() == 1 && sys.solutions[0].exact &&
                       sys.solutions[0].roots1[0] == Scalar(7);
        check(out, "fact2-bethe-root", root_ok, "anti-fundamental root b2 = 7 for z = {5, 8}");
        a2::Spec s;
        s.x1s = {Scalar(3)};
        s.x2s = {Scalar(12)};
        s.b2s = {Scalar(7)};
        s.ys = {Scalar(0), Scalar(2)};
        s.zs = zs;
        auto deg = a2::degenerate_b1(s);
        Scalar f2 = a2::fact2(s.x2s, s.x1s, s.b2s, s.ys, s.zs).value;
        bool ok = deg.signed_sum == f2 && deg.sequential_limit == f2 && f2 == Scalar(-1, 9);
        check(out, "fact2-pinned-instance", ok,
              "signed sum " + scalar_str(deg.signed_sum) + ", limit " +
                  scalar_str(deg.sequential_limit) + ", fact2 " + scalar_str(f2) +
                  " (all must be -1/9)");
    }
    {
        // m = 1 anti-fundamental system with a single z has no finite root
        auto sys = bethe::solve(bethe::Variant::A1AntiFundamental, {}, {Scalar(3)}, 1);
        check(out, "fact2-no-finite-root", sys.no_finite_solution && sys.solutions.empty(),
              "m=1, M=1 cleared equation is a nonzero constant");
    }
    return out;
}

// ---- criterion 12 ----
SuiteResult suite_lemma57(const Options& opts) {
    SuiteResult out{"lemma5-7", {}};
    Rng rng(opts.seed + 9);
    // l = m = 1, L = 2, M = 1
    auto x1s = rng.distinct(1, 40, 54, 2);
    auto b1s = rng.distinct(1, 80, 94, 2);
    auto x2s = rng.distinct(1, 60, 74, 2);
    auto b2s = rng.distinct(1, 100, 114, 2);
    auto ys = rng.distinct(2, 0, 12, 2);
    auto zs = rng.distinct(1, 20, 32, 2);
    {
        sp::Spec plain{x1s, b1s, ys, {}, ModelParams::rational(1), Norm::UnitB};
        Scalar rhsBase = sp::scalar_product(plain).value;
        long tested = 0;
        bool ok = true;
        for (Colour i1 : {1, 2})
            for (Colour j1 : {1, 2}) {
                if ((i1 == 2 ? 1 : 0) + (j1 == 1 ? 1 : 0) != 1) continue;  // m = 1
                ++tested;
                Scalar lhs = evaluate(a2::build_colour_fixed_b2(x1s, b1s, ys, zs, {i1}, {j1}),
                                      Method::Enumeration)
                                 .value;
                Scalar rhs = (j1 == 1 ? -rhsBase : rhsBase);
                ok &= lhs == rhs;
            }
        check(out, "lemma5-colour-invariance", ok && tested == 2,
              std::to_string(tested) + " admissible assignments, signed A1 value matched");
    }
    {
        Scalar rhsBase = evaluate(a2::build_antifund_sp(x2s, b2s, zs), Method::Enumeration).value;
        long tested = 0;
        bool ok = true;
        for (Colour i1 : {0, 1})
            for (Colour ja : {0, 1})
                for (Colour jb : {0, 1}) {
                    if ((i1 == 0 ? 1 : 0) + (ja == 1 ? 1 : 0) + (jb == 1 ? 1 : 0) != 1) continue;
                    ++tested;
                    Scalar lhs = evaluate(a2::build_colour_fixed_b1(x2s, b2s, ys, zs, {ja, jb}, {i1}),
                                          Method::Enumeration)
                                     .value;
                    Scalar rhs = (i1 == 0 ? -rhsBase : rhsBase);
                    ok &= lhs == rhs;
                }
        check(out, "lemma7-colour-invariance", ok && tested == 3,
              std::to_string(tested) + " admissible assignments, signed anti-fundamental value matched");
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"ybe",    "weight-identity", "dwpf-ik", "dwpf-properties",
            "lemma1", "lemma2",          "lemma3",  "slavnov",
            "appendix", "a2-degeneration", "factorization", "lemma5-7"};
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
    if (name == "ybe") return suite_ybe(opts);
    if (name == "weight-identity") return suite_weight_identity(opts);
    if (name == "dwpf-ik") return suite_dwpf_ik(opts);
    if (name == "dwpf-properties") return suite_dwpf_properties(opts);
    if (name == "lemma1") return suite_lemma1(opts);
    if (name == "lemma2") return suite_lemma2(opts);
    if (name == "lemma3") return suite_lemma3(opts);
    if (name == "slavnov") return suite_slavnov(opts);
    if (name == "appendix") return suite_appendix(opts);
    if (name == "a2-degeneration") return suite_a2_degeneration(opts);
    if (name == "factorization") return suite_factorization(opts);
    if (name == "lemma5-7") return suite_lemma57(opts);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const Options& opts) {
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, opts));
    return out;
}

}  // namespace verify
}  // namespace anvm
