// anvm: exact computation and verification for A_n vertex-model partition
// functions. JSON in, JSON out; see README for the verb reference.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "anvm/json_io.hpp"
#include "anvm/polynomial.hpp"
#include "anvm/scalar_product.hpp"
#include "anvm/dwpf.hpp"
#include "anvm/verify.hpp"

using namespace anvm;
using io::json;

namespace {

json read_input(const std::string& path) {
    if (path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& path, const json& j) {
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << j.dump(2) << "\n";
}

Method parse_method(const std::string& m) {
    if (m == "enumeration") return Method::Enumeration;
    if (m == "dp") return Method::FrontierDP;
    throw std::invalid_argument("method must be enumeration|dp|determinant|limit|all");
}

struct Io {
    std::string input = "-";
    std::string output = "-";
    std::string method = "enumeration";
    unsigned precision = BigFloat::kDefaultPrec;
    std::uint64_t seed = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "JSON input file, or - for stdin");
        cmd->add_option("--output", output, "JSON output file, or - for stdout");
        cmd->add_option("--method", method, "enumeration|dp|determinant|limit|all");
        cmd->add_option("--precision-bits", precision, "float precision (default 256)");
        cmd->add_option("--seed", seed, "random seed for search verbs");
    }
};

int run_checked(const std::function<int(json&)>& body, const Io& io, const char* verb) {
    json report;
    report["verb"] = verb;
    auto t0 = std::chrono::steady_clock::now();
    int rc;
    try {
        rc = body(report);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    auto t1 = std::chrono::steady_clock::now();
    // timing goes to stderr so reports stay byte-identical across runs
    std::cerr << verb << ": "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
    write_output(io.output, report);
    return rc;
}

bool values_match(const Scalar& a, const Scalar& b, unsigned prec) {
    if (a.is_rational() && b.is_rational()) return a == b;
    return (a - b).abs().to_float(prec) < BigFloat::pow2(-150, prec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact A_n vertex-model partition functions"};
    app.require_subcommand(1);

    Io io;

    auto* ybe = app.add_subcommand("ybe-check", "Yang-Baxter residual of an R-matrix triple");
    auto* dwpfCmd = app.add_subcommand("dwpf", "domain-wall partition function");
    auto* pdwpfCmd = app.add_subcommand("pdwpf", "partial domain-wall partition function (unit-b)");
    auto* spCmd = app.add_subcommand("scalar-product", "A1 (restricted) scalar product");
    auto* slavCmd = app.add_subcommand("slavnov", "Slavnov determinant (on-shell scalar product)");
    auto* ikCmd = app.add_subcommand("ik-sum", "Izergin-Korepin sum form of the scalar product");
    auto* colCmd = app.add_subcommand("coloured", "coloured DWPF / scalar product vs the A1 value");
    auto* betheCmd = app.add_subcommand("bethe-solve", "solve Bethe equations");
    auto* a2Cmd = app.add_subcommand("a2", "A2 scalar products, degenerations, factorizations");
    auto* limCmd = app.add_subcommand("limit", "sequential b->infinity limit vs determinant");
    auto* latCmd = app.add_subcommand("lattice", "evaluate a raw lattice specification");
    auto* verCmd = app.add_subcommand("verify", "run verification suites");

    for (auto* c : {ybe, dwpfCmd, pdwpfCmd, spCmd, slavCmd, ikCmd, colCmd, betheCmd, a2Cmd, limCmd,
                    latCmd})
        io.attach(c);

    std::string suite = "all";
    int maxSize = 0, rank = 0;
    verCmd->add_option("--suite", suite, "suite name or 'all'");
    verCmd->add_option("--max-size", maxSize, "override lattice size bound where applicable");
    verCmd->add_option("--rank", rank, "override rank where applicable");
    verCmd->add_option("--seed", io.seed, "random seed");
    verCmd->add_option("--output", io.output, "JSON output file, or - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ybe)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    ModelParams params = io::model_from_json(in.at("model"));
                    params.prec = io.precision;
                    Norm norm = io::norm_from_string(in.value("norm", "unit_a"));
                    WeightTable t(params, norm);
                    Scalar r = ybe_residual(t, io::scalar_from_json(in.at("x")),
                                            io::scalar_from_json(in.at("y")),
                                            io::scalar_from_json(in.at("z")));
                    rep["residual"] = io::scalar_to_json(r);
                    bool ok = r.is_rational() ? r.is_zero()
                                              : r.abs().to_float(io.precision) <
                                                    BigFloat::pow2(-200, io.precision);
                    rep["pass"] = ok;
                    return ok ? 0 : 1;
                },
                io, "ybe-check");

        if (*dwpfCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    dwpf::Spec spec;
                    spec.xs = io::scalars_from_json(in.at("xs"));
                    spec.ys = io::scalars_from_json(in.at("ys"));
                    if (in.contains("colours"))
                        for (const auto& c : in.at("colours")) spec.colours.push_back(c.get<int>());
                    if (in.contains("model")) spec.model = io::model_from_json(in.at("model"));
                    spec.model.prec = io.precision;
                    if (in.contains("norm")) spec.norm = io::norm_from_string(in.at("norm"));
                    json results = json::array();
                    std::vector<Scalar> vals;
                    auto add = [&](const PartitionValue& pv) {
                        results.push_back(io::partition_value_to_json(pv));
                        vals.push_back(pv.value);
                    };
                    if (io.method == "enumeration" || io.method == "all")
                        add(dwpf::dwpf(spec, Method::Enumeration));
                    if (io.method == "dp" || io.method == "all")
                        add(dwpf::dwpf(spec, Method::FrontierDP));
                    if (io.method == "determinant" || io.method == "all") {
                        if (spec.model.kind == ModelKind::Rational)
                            add(dwpf::dwpf_ik(spec.xs, spec.ys));
                        else
                            add(dwpf::dwpf_ik_trig(spec.xs, spec.ys, *spec.model.gamma,
                                                   io.precision));
                    }
                    if (results.empty()) throw std::invalid_argument("no method selected");
                    rep["results"] = results;
                    for (const auto& v : vals)
                        if (!values_match(v, vals[0], io.precision))
                            throw VerificationError("methods disagree on the DWPF value");
                    rep["value"] = io::scalar_to_json(vals[0]);
                    return 0;
                },
                io, "dwpf");

        if (*pdwpfCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    auto xs = io::scalars_from_json(in.at("xs"));
                    auto ys = io::scalars_from_json(in.at("ys"));
                    json results = json::array();
                    std::vector<Scalar> vals;
                    auto add = [&](const PartitionValue& pv) {
                        results.push_back(io::partition_value_to_json(pv));
                        vals.push_back(pv.value);
                    };
                    if (io.method == "enumeration" || io.method == "all")
                        add(dwpf::pdwpf(xs, ys, Method::Enumeration));
                    if (io.method == "dp" || io.method == "all")
                        add(dwpf::pdwpf(xs, ys, Method::FrontierDP));
                    if (io.method == "determinant" || io.method == "all")
                        add(dwpf::pdwpf_det(xs, ys));
                    if (io.method == "limit" || io.method == "all") {
                        // fourth route: (1/N!) lim b_N..b_1 S({x},{b}|{y}) in unit-b
                        auto f = [&](const std::vector<Scalar>& bs) {
                            sp::Spec s{xs, bs, ys, {}, ModelParams::rational(1), Norm::UnitB};
                            return sp::scalar_product(s).value;
                        };
                        std::vector<std::vector<Scalar>> roots(xs.size(), ys);
                        Scalar fact(1);
                        for (size_t k = 2; k <= xs.size(); ++k) fact *= Scalar((long)k);
                        add({a2::sequential_limit(f, roots) / fact, Provenance::Limit,
                             ModelKind::Rational, Norm::UnitB});
                    }
                    if (results.empty()) throw std::invalid_argument("no method selected");
                    rep["results"] = results;
                    for (const auto& v : vals)
                        if (v != vals[0]) throw VerificationError("methods disagree on pdwpf");
                    rep["value"] = io::scalar_to_json(vals[0]);
                    return 0;
                },
                io, "pdwpf");

        if (*spCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    sp::Spec spec;
                    spec.xs = io::scalars_from_json(in.at("xs"));
                    spec.bs = io::scalars_from_json(in.value("bs", json::array()));
                    spec.ys = io::scalars_from_json(in.at("ys"));
                    if (in.contains("colours"))
                        for (const auto& c : in.at("colours")) spec.colours.push_back(c.get<int>());
                    if (in.contains("model")) spec.model = io::model_from_json(in.at("model"));
                    if (in.contains("norm")) spec.norm = io::norm_from_string(in.at("norm"));
                    Method m = parse_method(io.method == "all" ? "enumeration" : io.method);
                    auto pv = spec.colours.empty() ? sp::scalar_product(spec, m)
                                                   : sp::coloured_scalar_product(spec, m);
                    rep["result"] = io::partition_value_to_json(pv);
                    return 0;
                },
                io, "scalar-product");

        if (*slavCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    auto xs = io::scalars_from_json(in.at("xs"));
                    auto bs = io::scalars_from_json(in.at("bs"));
                    auto ys = io::scalars_from_json(in.at("ys"));
                    rep["result"] = io::partition_value_to_json(sp::slavnov(xs, bs, ys));
                    rep["bethe_residuals"] = io::scalars_to_json(
                        bethe::residual(bethe::Variant::A1Fundamental, ys, {}, bs));
                    return 0;
                },
                io, "slavnov");

        if (*ikCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    auto xs = io::scalars_from_json(in.at("xs"));
                    auto bs = io::scalars_from_json(in.at("bs"));
                    auto ys = io::scalars_from_json(in.at("ys"));
                    rep["result"] = io::partition_value_to_json(sp::ik_sum(xs, bs, ys));
                    return 0;
                },
                io, "ik-sum");

        if (*colCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    std::string object = in.value("object", "dwpf");
                    Method m = parse_method(io.method == "all" ? "enumeration" : io.method);
                    Scalar coloured, plain;
                    if (object == "dwpf") {
                        dwpf::Spec spec;
                        spec.xs = io::scalars_from_json(in.at("xs"));
                        spec.ys = io::scalars_from_json(in.at("ys"));
                        for (const auto& c : in.at("colours")) spec.colours.push_back(c.get<int>());
                        spec.model = in.contains("model") ? io::model_from_json(in.at("model"))
                                                          : ModelParams::rational(2);
                        coloured = dwpf::coloured_dwpf(spec, m).value;
                        dwpf::Spec p1{spec.xs, spec.ys, {}, spec.model, Norm::UnitA};
                        plain = dwpf::dwpf(p1, m).value;
                    } else if (object == "scalar-product") {
                        sp::Spec spec;
                        spec.xs = io::scalars_from_json(in.at("xs"));
                        spec.bs = io::scalars_from_json(in.value("bs", json::array()));
                        spec.ys = io::scalars_from_json(in.at("ys"));
                        for (const auto& c : in.at("colours")) spec.colours.push_back(c.get<int>());
                        spec.model = in.contains("model") ? io::model_from_json(in.at("model"))
                                                          : ModelParams::rational(2);
                        coloured = sp::coloured_scalar_product(spec, m).value;
                        sp::Spec p1{spec.xs, spec.bs, spec.ys, {}, spec.model, Norm::UnitA};
                        plain = sp::scalar_product(p1, m).value;
                    } else {
                        throw std::invalid_argument("object must be dwpf or scalar-product");
                    }
                    rep["coloured"] = io::scalar_to_json(coloured);
                    rep["plain"] = io::scalar_to_json(plain);
                    rep["difference"] = io::scalar_to_json(coloured - plain);
                    rep["pass"] = coloured == plain;
                    return coloured == plain ? 0 : 1;
                },
                io, "coloured");

        if (*betheCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    auto variant = io::bethe_variant_from_string(in.at("variant"));
                    auto ys = io::scalars_from_json(in.value("ys", json::array()));
                    auto zs = io::scalars_from_json(in.value("zs", json::array()));
                    int c1 = in.value("count1", 0), c2 = in.value("count2", 0);
                    bethe::SolveConfig cfg;
                    cfg.seed = io.seed;
                    cfg.prec = io.precision;
                    if (in.contains("restarts")) cfg.restarts = in.at("restarts").get<int>();
                    rep["system"] = io::bethe_system_to_json(bethe::solve(variant, ys, zs, c1, c2, cfg));
                    return 0;
                },
                io, "bethe-solve");

        if (*a2Cmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    std::string op = in.value("op", "scalar-product");
                    a2::Spec spec = io::a2_spec_from_json(in);
                    Method m = parse_method(io.method == "all" ? "enumeration" : io.method);
                    if (op == "scalar-product") {
                        if (in.contains("layout")) {
                            a2::Layout layout = in.at("layout") == std::string("fig1b")
                                                    ? a2::Layout::Fig1b
                                                    : a2::Layout::Fig1a;
                            rep["result"] = io::partition_value_to_json(
                                a2::a2_scalar_product(spec, layout, m));
                            return 0;
                        }
                        // no layout requested: evaluate both and insist they agree
                        PartitionValue va = a2::a2_scalar_product(spec, a2::Layout::Fig1a, m);
                        PartitionValue vb = a2::a2_scalar_product(spec, a2::Layout::Fig1b, m);
                        rep["fig1a"] = io::scalar_to_json(va.value);
                        rep["fig1b"] = io::scalar_to_json(vb.value);
                        rep["difference"] = io::scalar_to_json(va.value - vb.value);
                        rep["result"] = io::partition_value_to_json(va);
                        if (!(va.value == vb.value))
                            throw VerificationError("fig1a and fig1b disagree");
                        return 0;
                    }
                    if (op == "degenerate-b2" || op == "degenerate-b1") {
                        auto d = op == "degenerate-b2" ? a2::degenerate_b2(spec, m)
                                                       : a2::degenerate_b1(spec, m);
                        rep["signed_sum"] = io::scalar_to_json(d.signed_sum);
                        rep["sequential_limit"] = io::scalar_to_json(d.sequential_limit);
                        rep["difference"] = io::scalar_to_json(d.signed_sum - d.sequential_limit);
                        rep["result"] = io::partition_value_to_json(d.value());
                        return 0;
                    }
                    if (op == "fact1") {
                        rep["result"] = io::partition_value_to_json(
                            a2::fact1(spec.x2s, spec.x1s, spec.b1s, spec.ys, spec.zs));
                        return 0;
                    }
                    if (op == "fact2") {
                        rep["result"] = io::partition_value_to_json(
                            a2::fact2(spec.x2s, spec.x1s, spec.b2s, spec.ys, spec.zs));
                        return 0;
                    }
                    if (op == "partial-det") {
                        auto xs = io::scalars_from_json(in.at("xs"));
                        auto plus = io::scalars_from_json(in.value("plus", json::array()));
                        auto minus = io::scalars_from_json(in.value("minus", json::array()));
                        rep["value"] = io::scalar_to_json(a2::partial_det(xs, plus, minus));
                        return 0;
                    }
                    throw std::invalid_argument("a2 op must be scalar-product | degenerate-b2 | "
                                                "degenerate-b1 | fact1 | fact2 | partial-det");
                },
                io, "a2");

        if (*limCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    std::string object = in.value("object", "pdwpf");
                    Method m = parse_method(io.method == "all" ? "enumeration" : io.method);
                    Scalar lim, detv;
                    if (object == "pdwpf") {
                        auto xs = io::scalars_from_json(in.at("xs"));
                        auto ys = io::scalars_from_json(in.at("ys"));
                        const size_t N = xs.size();
                        auto f = [&](const std::vector<Scalar>& bs) {
                            sp::Spec s{xs, bs, ys, {}, ModelParams::rational(1), Norm::UnitB};
                            return sp::scalar_product(s, m).value;
                        };
                        std::vector<std::vector<Scalar>> roots(N, ys);
                        Scalar fact(1);
                        for (size_t k = 2; k <= N; ++k) fact *= Scalar((long)k);
                        lim = a2::sequential_limit(f, roots) / fact;
                        detv = dwpf::pdwpf_det(xs, ys).value;
                    } else if (object == "partial-1" || object == "partial-2") {
                        a2::Spec spec = io::a2_spec_from_json(in);
                        if (object == "partial-1") {
                            const size_t mm = spec.x2s.size();
                            auto f = [&](const std::vector<Scalar>& b2s) {
                                return evaluate(a2::build_mixed_sp_x1z(spec.x2s, b2s, spec.x1s,
                                                                       spec.zs),
                                                m)
                                    .value;
                            };
                            std::vector<Scalar> rts = spec.x1s;
                            rts.insert(rts.end(), spec.zs.begin(), spec.zs.end());
                            std::vector<std::vector<Scalar>> roots(mm, rts);
                            Scalar fact(1);
                            for (size_t k = 2; k <= mm; ++k) fact *= Scalar((long)k);
                            lim = a2::sequential_limit(f, roots) / fact;
                            detv = a2::partial_det(spec.x2s, spec.x1s, spec.zs);
                        } else {
                            const size_t l = spec.x1s.size();
                            auto f = [&](const std::vector<Scalar>& b1s) {
                                return evaluate(a2::build_mixed_sp_yx2(spec.x1s, b1s, spec.ys,
                                                                       spec.x2s),
                                                m)
                                    .value;
                            };
                            std::vector<Scalar> rts = spec.ys;
                            rts.insert(rts.end(), spec.x2s.begin(), spec.x2s.end());
                            std::vector<std::vector<Scalar>> roots(l, rts);
                            Scalar fact(1);
                            for (size_t k = 2; k <= l; ++k) fact *= Scalar((long)k);
                            lim = a2::sequential_limit(f, roots) / fact;
                            detv = a2::partial_det(spec.x1s, spec.ys, spec.x2s);
                        }
                    } else {
                        throw std::invalid_argument("limit object must be pdwpf | partial-1 | partial-2");
                    }
                    rep["sequential_limit"] = io::scalar_to_json(lim);
                    rep["determinant"] = io::scalar_to_json(detv);
                    rep["difference"] = io::scalar_to_json(lim - detv);
                    if (lim != detv) throw VerificationError("limit and determinant disagree");
                    return 0;
                },
                io, "limit");

        if (*latCmd)
            return run_checked(
                [&](json& rep) {
                    json in = read_input(io.input);
                    rep["input"] = in;
                    Lattice lat = io::lattice_from_json(in);
                    lat.model.prec = io.precision;
                    if (io.method == "all") {
                        rep["result"] = io::partition_value_to_json(evaluate_checked(lat));
                    } else {
                        rep["result"] =
                            io::partition_value_to_json(evaluate(lat, parse_method(io.method)));
                    }
                    return 0;
                },
                io, "lattice");

        if (*verCmd) {
            verify::Options opts;
            opts.seed = io.seed == 1 ? 7 : io.seed;
            opts.max_size = maxSize;
            opts.rank = rank;
            std::vector<verify::SuiteResult> results;
            if (suite == "all")
                results = verify::run_all(opts);
            else
                results.push_back(verify::run_suite(suite, opts));
            json rep;
            rep["verb"] = "verify";
            rep["suite"] = suite;
            json suites = json::array();
            bool all_pass = true;
            for (const auto& s : results) {
                json sj;
                sj["suite"] = s.suite;
                sj["pass"] = s.pass();
                json cases = json::array();
                for (const auto& c : s.cases) {
                    cases.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
                    std::cerr << (c.pass ? "PASS " : "FAIL ") << s.suite << "/" << c.id << ": "
                              << c.detail << "\n";
                }
                sj["cases"] = cases;
                suites.push_back(sj);
                all_pass &= s.pass();
            }
            rep["suites"] = suites;
            rep["pass"] = all_pass;
            write_output(io.output, rep);
            return all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
