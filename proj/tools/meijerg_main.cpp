// Command-line surface: single-point evaluation, verification suites,
// moment/transform tables, zero reports and the stabilization search, with
// JSON or CSV output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meijerg/functionals.hpp"
#include "meijerg/gamma.hpp"
#include "meijerg/ghat.hpp"
#include "meijerg/hypergeom.hpp"
#include "meijerg/moments.hpp"
#include "meijerg/norlund.hpp"
#include "meijerg/positivity.hpp"
#include "meijerg/quadrature.hpp"
#include "meijerg/verify.hpp"

using json = nlohmann::json;
using meijerg::Complex;
using meijerg::EvalResult;

namespace {

// Missing/invalid command-line structure: exit code 1 with usage text.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& m) : std::runtime_error(m) {}
};

struct GlobalOpts {
    double tol = 1e-10;
    long max_terms = 100000;
    double quad_tol = 1e-11;
    uint64_t seed = 1;
    std::string output = "json";
    std::string params_file;
    bool strict = false;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Accepts "re" or "re+imj" / "re-imj" (e.g. 1.5, 1.5+2j, -0.5-1.25j).
Complex parse_complex(const std::string& s) {
    if (s.empty()) throw meijerg::domain_error("empty complex literal");
    if (s.back() != 'j' && s.back() != 'J') {
        size_t pos = 0;
        double re = std::stod(s, &pos);
        if (pos != s.size()) throw meijerg::domain_error("bad number: " + s);
        return Complex(re, 0.0);
    }
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not an exponent sign or leading sign
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        return Complex(0.0, std::stod(body));  // pure imaginary "2j"
    double re = std::stod(body.substr(0, split));
    double im = std::stod(body.substr(split));
    return Complex(re, im);
}

std::vector<Complex> parse_complex_list(const std::string& s) {
    std::vector<Complex> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - start);
        if (!item.empty()) out.push_back(parse_complex(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw meijerg::domain_error("empty parameter list");
    return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json eval_payload(const EvalResult& r) {
    return json{{"value_re", r.value.real()},
                {"value_im", r.value.imag()},
                {"abs_err", r.abs_err},
                {"method", meijerg::method_name(r.method)},
                {"count", r.count}};
}

void emit_eval(const GlobalOpts& g, const EvalResult& r) {
    if (g.output == "csv") {
        std::cout << "value_re,value_im,abs_err,method,count\n"
                  << fmt(r.value.real()) << ',' << fmt(r.value.imag()) << ','
                  << fmt(r.abs_err) << ',' << meijerg::method_name(r.method)
                  << ',' << r.count << "\n";
    } else {
        std::cout << eval_payload(r).dump() << "\n";
    }
}

// Parameters either from --a/--b/--n flags or from a JSON params file with
// schema {"a": [[re,im],...], "b": [[re,im],...], "n": int}.
struct ParamFlags {
    std::string a, b;
    int n = -1;

    meijerg::ParamVectors vectors(const GlobalOpts& g) const {
        if (!g.params_file.empty()) {
            std::ifstream in(g.params_file);
            if (!in) throw meijerg::domain_error("cannot open " + g.params_file);
            json j = json::parse(in);
            std::vector<Complex> av, bv;
            for (const auto& x : j.at("a")) av.push_back(Complex(x.at(0), x.at(1)));
            for (const auto& x : j.at("b")) bv.push_back(Complex(x.at(0), x.at(1)));
            return meijerg::ParamVectors(av, bv);
        }
        if (a.empty() || b.empty())
            throw usage_error("both --a and --b are required");
        return meijerg::ParamVectors(parse_complex_list(a), parse_complex_list(b));
    }

    int order(const GlobalOpts& g) const {
        if (!g.params_file.empty()) {
            std::ifstream in(g.params_file);
            json j = json::parse(in);
            if (j.contains("n")) return j.at("n").get<int>();
        }
        return n;
    }
};

struct KernelFlags {
    std::string kernel = "laplace";
    std::string sigma = "1", nu = "0.5", kc, kd;
    std::string z = "0";

    meijerg::KernelSpec spec() const {
        Complex zz = parse_complex(z);
        if (kernel == "laplace") return meijerg::KernelSpec::laplace(zz);
        if (kernel == "stieltjes")
            return meijerg::KernelSpec::stieltjes(parse_complex(sigma), zz);
        if (kernel == "bessel")
            return meijerg::KernelSpec::bessel(parse_complex(nu), zz);
        if (kernel == "general") {
            std::vector<Complex> c, d;
            if (!kc.empty()) c = parse_complex_list(kc);
            if (!kd.empty()) d = parse_complex_list(kd);
            return meijerg::KernelSpec::general(c, d, zz);
        }
        throw meijerg::domain_error("unknown kernel: " + kernel);
    }
};

int run_verify(const GlobalOpts& g, const std::string& suite, long cases,
               double suite_tol) {
    meijerg::verify::SuiteConfig cfg;
    cfg.seed = g.seed;
    cfg.cases = cases;
    cfg.tol_override = suite_tol;
    meijerg::verify::SuiteResult r = meijerg::verify::run_suite(suite, cfg);
    if (g.output == "csv") {
        std::cout << "suite,case,params,residual,tol,pass\n";
        for (const auto& row : r.rows)
            std::cout << row.suite << ',' << row.index << ",\"" << row.params
                      << "\"," << fmt(row.residual) << ',' << fmt(row.tol) << ','
                      << (row.pass ? 1 : 0) << "\n";
        std::cout << "# max_residual=" << fmt(r.max_residual) << " pass="
                  << (r.pass ? 1 : 0) << "\n";
    } else {
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back(json{{"suite", row.suite},
                                {"case", row.index},
                                {"params", row.params},
                                {"residual", row.residual},
                                {"tol", row.tol},
                                {"pass", row.pass}});
        std::cout << json{{"suite", r.suite},
                          {"rows", rows},
                          {"max_residual", r.max_residual},
                          {"pass", r.pass}}
                         .dump()
                  << "\n";
    }
    return r.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meijer-Norlund function toolkit: evaluation, regularized "
                 "functionals, transforms and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--tol", g.tol, "series tolerance");
    app.add_option("--max-terms", g.max_terms, "series term cap");
    app.add_option("--quad-tol", g.quad_tol, "quadrature tolerance");
    app.add_option("--seed", g.seed, "random-suite seed");
    app.add_option("--output", g.output, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--params-file", g.params_file,
                   "JSON file with {\"a\":[[re,im],..],\"b\":[[re,im],..],\"n\":int}");
    app.add_flag("--strict", g.strict, "exit 2 on hypothesis violations");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate one function value");
    std::string what;
    eval->add_option("what", what, "g0|ghat|g1|gb1|transform|pfq")->required();
    ParamFlags pf;
    eval->add_option("--a", pf.a, "a parameters (comma list, re or re+imj)");
    eval->add_option("--b", pf.b, "b parameters");
    eval->add_option("--n", pf.n, "order n");
    double t_flag = 0.5;
    eval->add_option("--t", t_flag, "argument t in (0,1]");
    KernelFlags kf;
    eval->add_option("--kernel", kf.kernel, "stieltjes|laplace|bessel|general");
    eval->add_option("--sigma", kf.sigma, "Stieltjes exponent");
    eval->add_option("--nu", kf.nu, "Bessel kernel parameter");
    eval->add_option("--kc", kf.kc, "general kernel upper parameters");
    eval->add_option("--kd", kf.kd, "general kernel lower parameters");
    eval->add_option("--z", kf.z, "kernel argument z");
    std::string upper, lower, zarg = "0";
    eval->add_option("--upper", upper, "pfq upper parameters");
    eval->add_option("--lower", lower, "pfq lower parameters");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    long cases = 0;
    double suite_tol = -1.0;
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    verify_cmd->add_option("--cases", cases, "number of random cases");
    verify_cmd->add_option("--suite-tol", suite_tol,
                           "override the per-row pass tolerance");

    // ---- moments ----
    auto* moments_cmd = app.add_subcommand("moments", "mixed-moment table");
    ParamFlags mf;
    moments_cmd->add_option("--a", mf.a)->required();
    moments_cmd->add_option("--b", mf.b)->required();
    moments_cmd->add_option("--n", mf.n)->required();
    int kmax = 4, rmax = 4;
    moments_cmd->add_option("--kmax", kmax);
    moments_cmd->add_option("--rmax", rmax);

    // ---- transform ----
    auto* transform_cmd = app.add_subcommand("transform", "kernel transform table");
    ParamFlags tf;
    transform_cmd->add_option("--a", tf.a)->required();
    transform_cmd->add_option("--b", tf.b)->required();
    transform_cmd->add_option("--n", tf.n)->required();
    KernelFlags tkf;
    transform_cmd->add_option("--kernel", tkf.kernel);
    transform_cmd->add_option("--sigma", tkf.sigma);
    transform_cmd->add_option("--nu", tkf.nu);
    transform_cmd->add_option("--kc", tkf.kc);
    transform_cmd->add_option("--kd", tkf.kd);
    std::string zlist = "0.3,1,3";
    transform_cmd->add_option("--z-list", zlist, "comma list of z values");

    // ---- zeros ----
    auto* zeros_cmd = app.add_subcommand("zeros", "zero localization report");
    std::string ahat_flag, bz_flag;
    double scan_hi = 4.0 * 3.14159265358979323846;
    zeros_cmd->add_option("--a-hat", ahat_flag)->required();
    zeros_cmd->add_option("--b", bz_flag)->required();
    zeros_cmd->add_option("--scan-hi", scan_hi);

    // ---- stabilize ----
    auto* stab_cmd = app.add_subcommand("stabilize", "sign stabilization search");
    ParamFlags sf;
    stab_cmd->add_option("--a", sf.a)->required();
    stab_cmd->add_option("--b", sf.b)->required();
    int grid = 40;
    stab_cmd->add_option("--grid", grid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (eval->parsed()) {
            if (what == "g0") {
                EvalResult r = meijerg::eval_g0(pf.vectors(g), t_flag, g.tol * 1e-3);
                emit_eval(g, r);
            } else if (what == "ghat") {
                int n = pf.order(g);
                if (n < 0) throw meijerg::domain_error("eval ghat requires --n >= 0");
                EvalResult r = meijerg::eval_ghat({pf.vectors(g), n}, t_flag, g.tol * 1e-3);
                emit_eval(g, r);
            } else if (what == "g1") {
                meijerg::RegFunctionalSpec spec{pf.vectors(g), pf.order(g)};
                EvalResult r = meijerg::g1_kernel(spec, kf.spec(), g.quad_tol);
                emit_eval(g, r);
            } else if (what == "gb1") {
                meijerg::RegFunctionalSpec spec{pf.vectors(g), pf.order(g)};
                double z = parse_complex(kf.z).real();
                int n_eff = spec.effective_n();
                EvalResult r = meijerg::gb1_action(
                    spec, meijerg::smooth_cos(z, std::max(n_eff, 2)),
                    std::max(g.quad_tol, 1e-9));
                emit_eval(g, r);
            } else if (what == "transform") {
                int n = pf.order(g);
                if (n < 0) throw meijerg::domain_error("eval transform requires --n");
                EvalResult r = meijerg::hyper_transform({pf.vectors(g), n}, kf.spec(),
                                                        g.tol * 0.01);
                emit_eval(g, r);
            } else if (what == "pfq") {
                if (upper.empty() && lower.empty() && pf.a.empty())
                    throw meijerg::domain_error("eval pfq requires --upper/--lower");
                meijerg::HypergeomSpec spec(
                    upper.empty() ? std::vector<Complex>{} : parse_complex_list(upper),
                    lower.empty() ? std::vector<Complex>{} : parse_complex_list(lower),
                    parse_complex(kf.z));
                EvalResult r = meijerg::pfq(spec, g.tol * 1e-3, g.max_terms);
                emit_eval(g, r);
            } else {
                throw meijerg::domain_error("unknown eval target: " + what);
            }
            return 0;
        }

        if (verify_cmd->parsed()) return run_verify(g, suite, cases, suite_tol);

        if (moments_cmd->parsed()) {
            meijerg::GHatSpec spec{mf.vectors(g), mf.order(g)};
            if (g.output == "csv") {
                std::cout << "k,r,value_re,value_im\n";
                for (int k = 0; k <= kmax; ++k)
                    for (int r = 0; r <= rmax; ++r) {
                        Complex v = meijerg::mixed_moment(spec, k, r);
                        std::cout << k << ',' << r << ',' << fmt(v.real()) << ','
                                  << fmt(v.imag()) << "\n";
                    }
            } else {
                json rows = json::array();
                for (int k = 0; k <= kmax; ++k)
                    for (int r = 0; r <= rmax; ++r) {
                        Complex v = meijerg::mixed_moment(spec, k, r);
                        rows.push_back(json{{"k", k}, {"r", r}, {"value", complex_json(v)}});
                    }
                std::cout << json{{"moments", rows}}.dump() << "\n";
            }
            return 0;
        }

        if (transform_cmd->parsed()) {
            meijerg::GHatSpec spec{tf.vectors(g), tf.order(g)};
            std::vector<Complex> zs = parse_complex_list(zlist);
            if (g.output == "csv")
                std::cout << "z_re,z_im,value_re,value_im,abs_err,count\n";
            json rows = json::array();
            for (Complex z : zs) {
                meijerg::KernelSpec kn = tkf.spec();
                kn.z = z;
                EvalResult r = meijerg::hyper_transform(spec, kn, g.tol * 0.01);
                if (g.output == "csv") {
                    std::cout << fmt(z.real()) << ',' << fmt(z.imag()) << ','
                              << fmt(r.value.real()) << ',' << fmt(r.value.imag())
                              << ',' << fmt(r.abs_err) << ',' << r.count << "\n";
                } else {
                    rows.push_back(json{{"z", complex_json(z)},
                                        {"value", complex_json(r.value)},
                                        {"abs_err", r.abs_err},
                                        {"count", r.count}});
                }
            }
            if (g.output != "csv") std::cout << json{{"transform", rows}}.dump() << "\n";
            return 0;
        }

        if (zeros_cmd->parsed()) {
            meijerg::ZeroScan scan = meijerg::find_zeros_thm42(
                parse_complex_list(ahat_flag), parse_complex_list(bz_flag), scan_hi);
            if (!scan.hypotheses_ok && g.strict) {
                std::cerr << "hypothesis violation: v-condition not certified\n";
                return 2;
            }
            if (g.output == "csv") {
                std::cout << "interval_lo,interval_hi,root,fprime,simple\n";
                for (const auto& zr : scan.zeros)
                    std::cout << fmt(zr.lo) << ',' << fmt(zr.hi) << ','
                              << fmt(zr.root) << ',' << fmt(zr.derivative) << ','
                              << (zr.simple ? 1 : 0) << "\n";
                std::cout << "# in_theorem=" << (scan.hypotheses_ok ? 1 : 0)
                          << " extra_zeros=" << scan.extra_zeros << "\n";
            } else {
                json rows = json::array();
                for (const auto& zr : scan.zeros)
                    rows.push_back(json{{"interval_lo", zr.lo},
                                        {"interval_hi", zr.hi},
                                        {"root", zr.root},
                                        {"fprime", zr.derivative},
                                        {"simple", zr.simple}});
                std::cout << json{{"zeros", rows},
                                  {"count_interval1", scan.count_interval1},
                                  {"count_interval2", scan.count_interval2},
                                  {"extra_zeros", scan.extra_zeros},
                                  {"in_theorem", scan.hypotheses_ok}}
                                 .dump()
                          << "\n";
            }
            return 0;
        }

        if (stab_cmd->parsed()) {
            meijerg::ParamVectors pv = sf.vectors(g);
            int N = meijerg::stabilization_N(pv, grid);
            json evidence = json::array();
            for (int n = N; n <= N + 2; ++n) {
                meijerg::SignInfo si = meijerg::origin_sign_info({pv, n});
                double sgn = si.eta == 0 ? 1.0 : -1.0;
                double mn = 1e300;
                for (int i = 1; i <= grid; ++i) {
                    double tt = static_cast<double>(i) / grid;
                    mn = std::min(mn, sgn * meijerg::eval_ghat({pv, n}, tt).value.real());
                }
                evidence.push_back(json{{"n", n}, {"eta", si.eta}, {"grid_min", mn}});
            }
            if (g.output == "csv") {
                std::cout << "N,grid\n" << N << ',' << grid << "\n";
                std::cout << "n,eta,grid_min\n";
                for (const auto& e : evidence)
                    std::cout << e["n"].get<int>() << ',' << e["eta"].get<int>() << ','
                              << fmt(e["grid_min"].get<double>()) << "\n";
            } else {
                std::cout << json{{"N", N}, {"grid", grid}, {"evidence", evidence}}.dump()
                          << "\n";
            }
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n"
                  << "run with --help for the full flag list\n";
        return 1;
    } catch (const meijerg::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const meijerg::ill_conditioned_error& e) {
        std::cerr << "ill-conditioned: " << e.what() << "\n";
        return 2;
    } catch (const meijerg::convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
