// Command-line front end: every library operation is reachable from exactly
// one subcommand, results print as CSV (byte-stable) or JSON (adds wall
// time), and the `table` subcommand reproduces the published reference
// tables with per-row relative differences.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tbi/addition.hpp"
#include "tbi/bessel_double.hpp"
#include "tbi/bessel_single.hpp"
#include "tbi/composite.hpp"
#include "tbi/core.hpp"
#include "tbi/oracle.hpp"
#include "tbi/output.hpp"
#include "tbi/quadrature.hpp"
#include "tbi/tables.hpp"
#include "tbi/types.hpp"
#include "tbi/uehling.hpp"

namespace {

using tbi::ExpParams;
using tbi::IntegralResult;
using tbi::PowerIndices;
using tbi::SeriesControl;
using tbi::output::Format;
using tbi::output::format_value;
using tbi::output::OutputRecord;

using Echo = std::vector<std::pair<std::string, std::string>>;

std::string fmt_int(long v) { return std::to_string(v); }

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

int emit(OutputRecord rec, Format fmt, double seconds) {
    rec.wall_time_seconds = seconds;
    std::fputs(tbi::output::render(rec, fmt).c_str(), stdout);
    return rec.converged ? 0 : 4;
}

int emit_result(const std::string& op, Echo inputs, const IntegralResult& res,
                Format fmt, const Timer& timer) {
    return emit(tbi::output::make_record(op, std::move(inputs), res), fmt,
                timer.seconds());
}

int emit_scalar(const std::string& op, Echo inputs, double value, Format fmt,
                const Timer& timer) {
    return emit_result(op, std::move(inputs), IntegralResult{value, 0.0, 0, true},
                       fmt, timer);
}

// Deterministic uniform generator shared with the test suites: the explicit
// 53-bit mapping keeps output identical across standard libraries.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

struct Options {
    // global
    double tol = 1e-15;
    int qmax = -1;
    std::string format = "csv";
    std::string precision = "standard";

    // shared integral parameters
    int k = 0, l = 0, n = 0;
    double a = 1.0, b = 1.0, c = 1.0;
    double V = 0.0;

    // gamma
    std::vector<int> term;

    // basic-b / power-g
    double bb_a = 1.0, bb_b = 1.0, bb_c = 1.0;
    std::vector<double> bb_p{0.0, 0.0, 0.0};
    std::vector<double> bb_q{1.0, 0.0, 0.0, 0.0};
    double bb_s = 1.0;

    // bessel
    int order = 0;
    int radial_arg = 32;
    double point = -1.0;
    bool have_point = false;

    // bessel2
    std::vector<int> orders{0, 0};
    bool sin_sin = false;
    bool product = false;
    double ax = 1.0, by = 1.0, px = 0.0, py = 0.0;
    int pmax = 40;

    // uehling
    double q1 = 1.0, q2 = -1.0, q3 = -1.0;
    double fine_structure = 1.0 / 137.035999;
    double nuclear_charge = 1.0;
    int kernel_pair = 0;
    double shift = 0.0;
    bool yukawa = false;
    double mu = 0.0, v0 = 1.0;
    int me_nodes = 64;
    double r = 1.0;
    std::string point_mode = "ki";
    int ki_order = -1;
    double ki_z = 1.0;

    // j-integral / series
    double t = 0.0;
    int kappa_max = 40;
    std::vector<std::string> series_terms;
    bool damped = false;

    // oracle
    std::string kind = "gamma";
    int nodes = 128;
    bool volume_weight = false;
    std::string convert;
    std::vector<double> coords{0.0, 0.0, 0.0};
    std::string quad1d;

    // table
    std::string which = "I";

    // addition-survey
    int count = 100;
    std::uint64_t seed = 12345;
    double wave_k = 1.0;
    int big_l = 1;
    int lmax = 30;
    std::vector<double> rayleigh_args;
    std::vector<double> geometry_args;
    std::vector<double> legendre_args;

    Format fmt() const {
        return format == "json" ? Format::json : Format::csv;
    }
    SeriesControl ctl_single() const {
        SeriesControl ctl;
        ctl.rel_tol = tol;
        if (qmax > 0) ctl.q_max = qmax;
        ctl.extended_accumulator = (precision == "extended");
        return ctl;
    }
    SeriesControl ctl_double() const {
        SeriesControl ctl = tbi::bessel::double_series_control();
        ctl.rel_tol = tol;
        if (qmax > 0) ctl.q_max = qmax;
        ctl.extended_accumulator = (precision == "extended");
        return ctl;
    }
    PowerIndices idx() const { return PowerIndices{k, l, n}; }
    ExpParams params() const { return ExpParams{a, b, c}; }
    Echo common_echo() const {
        return Echo{{"k", fmt_int(k)},       {"l", fmt_int(l)},
                    {"n", fmt_int(n)},       {"a", format_value(a)},
                    {"b", format_value(b)},  {"c", format_value(c)}};
    }
};

int run_gamma(const Options& opt) {
    Timer timer;
    if (!opt.term.empty()) {
        const tbi::SignedLog sl = tbi::core::log_term_magnitude(
            opt.term[0], opt.term[1], opt.term[2], opt.idx(), opt.params());
        Echo echo = opt.common_echo();
        echo.emplace_back("k1", fmt_int(opt.term[0]));
        echo.emplace_back("l1", fmt_int(opt.term[1]));
        echo.emplace_back("n1", fmt_int(opt.term[2]));
        echo.emplace_back("sign", fmt_int(sl.sign));
        return emit_scalar("log_term_magnitude", std::move(echo),
                           static_cast<double>(sl.log_abs), opt.fmt(), timer);
    }
    const IntegralResult res = tbi::core::gamma_klm(opt.idx(), opt.params());
    return emit_result("gamma", opt.common_echo(), res, opt.fmt(), timer);
}

tbi::core::BasicBSpec make_basic_spec(const Options& opt) {
    tbi::core::BasicBSpec spec;
    spec.a = opt.bb_a;
    spec.b = opt.bb_b;
    spec.c = opt.bb_c;
    spec.p1 = opt.bb_p[0];
    spec.p2 = opt.bb_p[1];
    spec.p3 = opt.bb_p[2];
    spec.q0 = opt.bb_q[0];
    spec.q1 = opt.bb_q[1];
    spec.q2 = opt.bb_q[2];
    spec.q3 = opt.bb_q[3];
    spec.s = opt.bb_s;
    return spec;
}

Echo basic_echo(const tbi::core::BasicBSpec& s) {
    return Echo{{"a", format_value(s.a)},   {"b", format_value(s.b)},
                {"c", format_value(s.c)},   {"p1", format_value(s.p1)},
                {"p2", format_value(s.p2)}, {"p3", format_value(s.p3)},
                {"q0", format_value(s.q0)}, {"q1", format_value(s.q1)},
                {"q2", format_value(s.q2)}, {"q3", format_value(s.q3)},
                {"s", format_value(s.s)}};
}

int run_basic_b(const Options& opt) {
    Timer timer;
    const auto spec = make_basic_spec(opt);
    const IntegralResult res = tbi::core::basic_b(spec, opt.tol > 0 ? opt.tol : 1e-12);
    return emit_result("basic_b", basic_echo(spec), res, opt.fmt(), timer);
}

int run_power_g(const Options& opt) {
    Timer timer;
    const auto spec = make_basic_spec(opt);
    const IntegralResult res = tbi::core::power_g(spec);
    return emit_result("power_g", basic_echo(spec), res, opt.fmt(), timer);
}

tbi::bessel::RadialArg radial_arg_from(int code, const char* where) {
    switch (code) {
        case 32: return tbi::bessel::RadialArg::r32;
        case 31: return tbi::bessel::RadialArg::r31;
        case 21: return tbi::bessel::RadialArg::r21;
    }
    throw std::domain_error(std::string(where) +
                            ": --radial-arg must be 32, 31 or 21");
}

int run_bessel(const Options& opt) {
    Timer timer;
    if (opt.have_point) {
        Echo echo{{"L", fmt_int(opt.order)}, {"x", format_value(opt.point)}};
        return emit_scalar("spherical_jL", std::move(echo),
                           tbi::bessel::spherical_jL(opt.order, opt.point),
                           opt.fmt(), timer);
    }
    Echo echo = opt.common_echo();
    echo.emplace_back("V", format_value(opt.V));
    echo.emplace_back("L", fmt_int(opt.order));
    echo.emplace_back("radial_arg", fmt_int(opt.radial_arg));
    if (opt.order == -1) {
        // The order -1 member lives in the composite module and has no
        // radial-argument selector; apply the same label swap here.
        PowerIndices idx = opt.idx();
        ExpParams params = opt.params();
        if (opt.radial_arg == 31) {
            std::swap(idx.k, idx.l);
            std::swap(params.alpha, params.beta);
        } else if (opt.radial_arg == 21) {
            std::swap(idx.k, idx.n);
            std::swap(params.alpha, params.gamma);
        } else if (opt.radial_arg != 32) {
            radial_arg_from(opt.radial_arg, "bessel");
        }
        const IntegralResult res = tbi::composite::bessel_neg1_integral(
            idx, params, opt.V, opt.ctl_single());
        return emit_result("bessel_neg1_integral", std::move(echo), res,
                           opt.fmt(), timer);
    }
    tbi::bessel::BesselIntegralSpec spec;
    spec.idx = opt.idx();
    spec.params = opt.params();
    spec.V = opt.V;
    spec.L = opt.order;
    spec.arg = radial_arg_from(opt.radial_arg, "bessel");
    const SeriesControl ctl = opt.ctl_single();
    IntegralResult res;
    std::string name;
    if (opt.order == 0) {
        res = tbi::bessel::bessel0_integral(spec, ctl);
        name = "bessel0_integral";
    } else if (opt.order == 1) {
        res = tbi::bessel::bessel1_integral(spec, ctl);
        name = "bessel1_integral";
    } else {
        res = tbi::bessel::besselL_integral(spec, ctl);
        name = "besselL_integral";
    }
    return emit_result(name, std::move(echo), res, opt.fmt(), timer);
}

int run_bessel2(const Options& opt) {
    Timer timer;
    if (opt.product) {
        Echo echo{{"L1", fmt_int(opt.orders[0])}, {"L2", fmt_int(opt.orders[1])},
                  {"ax", format_value(opt.ax)},   {"by", format_value(opt.by)},
                  {"x", format_value(opt.px)},    {"y", format_value(opt.py)},
                  {"pmax", fmt_int(opt.pmax)}};
        const double v = tbi::bessel::product_jj_series(
            opt.orders[0], opt.orders[1], opt.ax, opt.by, opt.px, opt.py,
            opt.pmax);
        return emit_scalar("product_jj_series", std::move(echo), v, opt.fmt(),
                           timer);
    }
    Echo echo = opt.common_echo();
    echo.emplace_back("V", format_value(opt.V));
    if (opt.sin_sin) {
        const IntegralResult res = tbi::bessel::sin_sin_integral(
            opt.idx(), opt.params(), opt.V, opt.ctl_double());
        return emit_result("sin_sin_integral", std::move(echo), res, opt.fmt(),
                           timer);
    }
    echo.emplace_back("L1", fmt_int(opt.orders[0]));
    echo.emplace_back("L2", fmt_int(opt.orders[1]));
    tbi::bessel::DoubleBesselSpec spec;
    spec.idx = opt.idx();
    spec.params = opt.params();
    spec.V = opt.V;
    spec.L1 = opt.orders[0];
    spec.L2 = opt.orders[1];
    const IntegralResult res =
        tbi::bessel::double_bessel_integral(spec, opt.ctl_double());
    return emit_result("double_bessel_integral", std::move(echo), res,
                       opt.fmt(), timer);
}

tbi::uehling::UehlingSystem make_system(const Options& opt) {
    tbi::uehling::UehlingSystem sys;
    sys.q1 = opt.q1;
    sys.q2 = opt.q2;
    sys.q3 = opt.q3;
    sys.fine_structure = opt.fine_structure;
    sys.b = 1.0 / opt.fine_structure;
    sys.nuclear_charge = opt.nuclear_charge;
    return sys;
}

int run_uehling_me(const Options& opt) {
    Timer timer;
    if (opt.kernel_pair != 0) {
        tbi::uehling::Pair pair;
        switch (opt.kernel_pair) {
            case 21: pair = tbi::uehling::Pair::p21; break;
            case 31: pair = tbi::uehling::Pair::p31; break;
            case 32: pair = tbi::uehling::Pair::p32; break;
            default:
                throw std::domain_error(
                    "uehling-me: --kernel must be 21, 31 or 32");
        }
        Echo echo{{"pair", fmt_int(opt.kernel_pair)},
                  {"a", format_value(opt.a)},
                  {"b", format_value(opt.b)},
                  {"c", format_value(opt.c)},
                  {"shift", format_value(opt.shift)}};
        const double v = tbi::uehling::ubar_kernel(pair, opt.params(), opt.shift);
        return emit_scalar("ubar_kernel", std::move(echo), v, opt.fmt(), timer);
    }
    if (opt.yukawa) {
        Echo echo{{"a", format_value(opt.a)},   {"b", format_value(opt.b)},
                  {"c", format_value(opt.c)},   {"mu", format_value(opt.mu)},
                  {"v0", format_value(opt.v0)}};
        const IntegralResult res =
            tbi::uehling::yukawa_matrix_element(opt.params(), opt.mu, opt.v0);
        return emit_result("yukawa_matrix_element", std::move(echo), res,
                           opt.fmt(), timer);
    }
    const auto sys = make_system(opt);
    tbi::uehling::XiQuadSpec quad;
    quad.node_count = opt.me_nodes;
    quad.tol = (opt.tol < 1e-8) ? 1e-10 : opt.tol;
    Echo echo{{"q1", format_value(sys.q1)},
              {"q2", format_value(sys.q2)},
              {"q3", format_value(sys.q3)},
              {"fine_structure", format_value(sys.fine_structure)},
              {"a", format_value(opt.a)},
              {"b", format_value(opt.b)},
              {"c", format_value(opt.c)}};
    const IntegralResult res =
        tbi::uehling::uehling_matrix_element(sys, opt.params(), quad);
    return emit_result("uehling_matrix_element", std::move(echo), res,
                       opt.fmt(), timer);
}

int run_uehling_point(const Options& opt) {
    Timer timer;
    if (opt.ki_order >= 0) {
        Echo echo{{"n", fmt_int(opt.ki_order)}, {"z", format_value(opt.ki_z)}};
        const double v = (opt.ki_order == 0)
                             ? tbi::uehling::bessel_k0(opt.ki_z)
                             : tbi::uehling::ki_n(opt.ki_order, opt.ki_z);
        return emit_scalar(opt.ki_order == 0 ? "bessel_k0" : "ki_n",
                           std::move(echo), v, opt.fmt(), timer);
    }
    const auto sys = make_system(opt);
    const auto mode = (opt.point_mode == "integral")
                          ? tbi::uehling::PointMode::integral
                          : tbi::uehling::PointMode::ki_form;
    Echo echo{{"r", format_value(opt.r)},
              {"mode", opt.point_mode},
              {"fine_structure", format_value(sys.fine_structure)},
              {"nuclear_charge", format_value(sys.nuclear_charge)}};
    const double v = tbi::uehling::uehling_potential_point(sys, opt.r, mode);
    return emit_scalar("uehling_potential_point", std::move(echo), v,
                       opt.fmt(), timer);
}

int run_j_integral(const Options& opt) {
    Timer timer;
    tbi::composite::JSpec spec;
    spec.idx = opt.idx();
    spec.params = opt.params();
    spec.t = opt.t;
    spec.kappa_max = opt.kappa_max;
    Echo echo = opt.common_echo();
    echo.emplace_back("t", format_value(opt.t));
    const IntegralResult res =
        tbi::composite::j_integral(spec, opt.ctl_single());
    return emit_result("j_integral", std::move(echo), res, opt.fmt(), timer);
}

tbi::composite::SeriesFunction parse_series_terms(
    const std::vector<std::string>& specs) {
    tbi::composite::SeriesFunction f;
    for (const std::string& s : specs) {
        tbi::composite::SeriesTerm term;
        const auto first = s.find(',');
        if (first == std::string::npos) {
            throw std::domain_error("series: --term needs A,n or A,n,B");
        }
        const auto second = s.find(',', first + 1);
        term.A = std::stod(s.substr(0, first));
        term.n = std::stoi(s.substr(first + 1, second - first - 1));
        if (second != std::string::npos) {
            term.B = std::stod(s.substr(second + 1));
        }
        f.terms.push_back(term);
    }
    return f;
}

int run_series(const Options& opt) {
    Timer timer;
    const auto f = parse_series_terms(opt.series_terms);
    Echo echo{{"terms", fmt_int(static_cast<long>(f.terms.size()))},
              {"damped", opt.damped ? "1" : "0"},
              {"a", format_value(opt.a)},
              {"b", format_value(opt.b)},
              {"c", format_value(opt.c)}};
    const IntegralResult res =
        tbi::composite::series_integral(f, opt.params(), opt.damped);
    return emit_result("series_integral", std::move(echo), res, opt.fmt(),
                       timer);
}

int run_oracle(const Options& opt) {
    Timer timer;
    if (!opt.convert.empty()) {
        std::string header, row;
        if (opt.convert == "r2u") {
            const tbi::PerimetricPoint u = tbi::core::to_perimetric(
                tbi::RelativePoint{opt.coords[0], opt.coords[1], opt.coords[2]});
            header = "u1,u2,u3";
            row = format_value(u.u1) + "," + format_value(u.u2) + "," +
                  format_value(u.u3);
        } else {
            const tbi::RelativePoint r = tbi::core::from_perimetric(
                tbi::PerimetricPoint{opt.coords[0], opt.coords[1], opt.coords[2]});
            header = "r32,r31,r21";
            row = format_value(r.r32) + "," + format_value(r.r31) + "," +
                  format_value(r.r21);
        }
        if (opt.fmt() == Format::csv) {
            std::printf("%s\n%s\n", header.c_str(), row.c_str());
        } else {
            std::printf("{\"convert\":\"%s\",\"result\":\"%s\"}\n",
                        opt.convert.c_str(), row.c_str());
        }
        return 0;
    }
    if (!opt.quad1d.empty()) {
        Echo echo{{"quad1d", opt.quad1d}};
        IntegralResult res;
        if (opt.quad1d == "expx") {
            res = tbi::oracle::quad1d_semiinfinite(
                [](double x) { return std::exp(-x); }, 1.0, opt.tol);
        } else if (opt.quad1d == "xexp2") {
            res = tbi::oracle::quad1d_semiinfinite(
                [](double x) { return x * std::exp(-2.0 * x); }, 2.0, opt.tol);
        } else {
            res = tbi::oracle::quad1d_semiinfinite(
                [](double x) { return std::exp(-std::cosh(x)); }, 1.0,
                opt.tol);
        }
        return emit_result("quad1d_semiinfinite", std::move(echo), res,
                           opt.fmt(), timer);
    }
    tbi::oracle::OracleSpec spec;
    spec.params = opt.params();
    spec.nodes_per_axis = opt.nodes;
    spec.include_volume_weight = opt.volume_weight;
    const int k = opt.k, l = opt.l, n = opt.n;
    const double V = opt.V, t = opt.t;
    const int L1 = opt.orders[0], L2 = opt.orders[1];
    auto powers = [k, l, n](const tbi::RelativePoint& p) {
        double v = 1.0;
        for (int i = 0; i < k; ++i) v *= p.r32;
        for (int i = 0; i < l; ++i) v *= p.r31;
        for (int i = 0; i < n; ++i) v *= p.r21;
        return v;
    };
    if (opt.kind == "const") {
        spec.integrand = [](const tbi::RelativePoint&) { return 1.0; };
    } else if (opt.kind == "gamma") {
        spec.integrand = powers;
    } else if (opt.kind == "j0") {
        spec.integrand = [powers, V](const tbi::RelativePoint& p) {
            return powers(p) * tbi::bessel::spherical_jL(0, V * p.r32);
        };
    } else if (opt.kind == "cos") {
        spec.integrand = [powers, V](const tbi::RelativePoint& p) {
            return powers(p) * std::cos(V * p.r32);
        };
    } else if (opt.kind == "jj") {
        spec.integrand = [powers, V, L1, L2](const tbi::RelativePoint& p) {
            return powers(p) * tbi::bessel::spherical_jL(L1, V * p.r32) *
                   tbi::bessel::spherical_jL(L2, V * p.r31);
        };
    } else if (opt.kind == "jshift") {
        spec.integrand = [powers, t](const tbi::RelativePoint& p) {
            const double arg2 = p.r32 * p.r32 - 2.0 * t * p.r32;
            const double c = (arg2 >= 0.0) ? std::cos(std::sqrt(arg2))
                                           : std::cosh(std::sqrt(-arg2));
            return powers(p) * c;
        };
    } else {
        throw std::domain_error("oracle: unknown --kind " + opt.kind);
    }
    Echo echo = opt.common_echo();
    echo.emplace_back("kind", opt.kind);
    echo.emplace_back("V", format_value(opt.V));
    echo.emplace_back("nodes", fmt_int(opt.nodes));
    echo.emplace_back("volume_weight", opt.volume_weight ? "1" : "0");
    const IntegralResult res = tbi::oracle::quad3d(spec);
    return emit_result("quad3d", std::move(echo), res, opt.fmt(), timer);
}

int run_table(const Options& opt) {
    using namespace tbi::tables;
    const bool csv = opt.fmt() == Format::csv;
    if (opt.which == "I") {
        if (csv) std::printf("k,gamma,computed,published,rel_diff\n");
        else std::printf("[\n");
        for (std::size_t i = 0; i < 10; ++i) {
            const GammaRow& row = kGammaTable[i];
            for (int sign = 0; sign < 2; ++sign) {
                const double g = sign == 0 ? kGammaAbs : -kGammaAbs;
                const double published =
                    sign == 0 ? row.positive_gamma : row.negative_gamma;
                const double computed =
                    tbi::core::gamma_klm(PowerIndices{row.k, kL, kN},
                                         ExpParams{kAlpha, kBeta, g})
                        .value;
                const double rel = std::fabs(computed / published - 1.0);
                if (csv) {
                    std::printf("%d,%s,%s,%s,%.3E\n", row.k,
                                format_value(g).c_str(),
                                format_value(computed).c_str(),
                                format_value(published).c_str(), rel);
                } else {
                    std::printf(
                        "  {\"k\":%d,\"gamma\":%s,\"computed\":\"%s\","
                        "\"published\":\"%s\",\"rel_diff\":%.3E}%s\n",
                        row.k, format_value(g).c_str(),
                        format_value(computed).c_str(),
                        format_value(published).c_str(), rel,
                        (i == 9 && sign == 1) ? "" : ",");
                }
            }
        }
        if (!csv) std::printf("]\n");
        return 0;
    }
    if (opt.which != "II") {
        throw std::domain_error("table: --which must be I or II");
    }
    const ExpParams params{kAlpha, kBeta, kGammaAbs};
    if (csv) {
        std::printf(
            "k,V,b0_computed,b0_published,b0_rel_diff,"
            "b1_computed,b1_published,b1_rel_diff,suspect\n");
    } else {
        std::printf("[\n");
    }
    for (std::size_t i = 0; i < 10; ++i) {
        const BesselRow& row = kBesselTable[i];
        tbi::bessel::BesselIntegralSpec spec;
        spec.idx = PowerIndices{row.k, kL, kN};
        spec.params = params;
        spec.V = row.V;
        const SeriesControl ctl = opt.ctl_single();
        const double b0 = tbi::bessel::bessel0_integral(spec, ctl).value;
        const double b1 = tbi::bessel::bessel1_integral(spec, ctl).value;
        const double rel0 = std::fabs(b0 / row.b0 - 1.0);
        const double rel1 = std::fabs(b1 / row.b1 - 1.0);
        if (csv) {
            std::printf("%d,%s,%s,%s,%.3E,%s,%s,%.3E,%d\n", row.k,
                        format_value(row.V).c_str(), format_value(b0).c_str(),
                        format_value(row.b0).c_str(), rel0,
                        format_value(b1).c_str(), format_value(row.b1).c_str(),
                        rel1, row.suspect ? 1 : 0);
        } else {
            std::printf(
                "  {\"k\":%d,\"V\":%s,\"b0_computed\":\"%s\","
                "\"b0_published\":\"%s\",\"b0_rel_diff\":%.3E,"
                "\"b1_computed\":\"%s\",\"b1_published\":\"%s\","
                "\"b1_rel_diff\":%.3E,\"suspect\":%s}%s\n",
                row.k, format_value(row.V).c_str(), format_value(b0).c_str(),
                format_value(row.b0).c_str(), rel0, format_value(b1).c_str(),
                format_value(row.b1).c_str(), rel1,
                row.suspect ? "true" : "false", i == 9 ? "" : ",");
        }
    }
    if (!csv) std::printf("]\n");
    return 0;
}

tbi::addition::TriangleGeometry random_geometry(Rng& rng) {
    constexpr double kPi = 3.14159265358979323846;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double t31 = rng.uniform(0.05, kPi - 0.1);
        const double t32 = rng.uniform(0.05, kPi - 0.1);
        if (t31 + t32 > kPi - 0.02) continue;
        const double r31 = rng.uniform(0.3, 2.0);
        try {
            return tbi::addition::from_angles(r31, t31, t32);
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::runtime_error("addition-survey: geometry sampling failed");
}

int run_addition_survey(const Options& opt) {
    Timer timer;
    if (!opt.legendre_args.empty()) {
        const int L = static_cast<int>(opt.legendre_args[0]);
        const double x = opt.legendre_args[1];
        Echo echo{{"L", fmt_int(L)}, {"x", format_value(x)}};
        return emit_scalar("legendre_p", std::move(echo),
                           tbi::addition::legendre_p(L, x), opt.fmt(), timer);
    }
    if (!opt.rayleigh_args.empty()) {
        const double kr = opt.rayleigh_args[0];
        const double ct = opt.rayleigh_args[1];
        const int L_max = static_cast<int>(opt.rayleigh_args[2]);
        const std::complex<double> sum =
            tbi::addition::rayleigh_partial_sum(kr, ct, L_max);
        const std::complex<double> exact =
            std::exp(std::complex<double>(0.0, kr * ct));
        Echo echo{{"kr", format_value(kr)},
                  {"cos_theta", format_value(ct)},
                  {"L_max", fmt_int(L_max)},
                  {"sum_re", format_value(sum.real())},
                  {"sum_im", format_value(sum.imag())}};
        return emit_scalar("rayleigh_partial_sum", std::move(echo),
                           std::abs(sum - exact), opt.fmt(), timer);
    }
    const bool csv = opt.fmt() == Format::csv;
    std::vector<tbi::addition::TriangleGeometry> geoms;
    if (!opt.geometry_args.empty()) {
        geoms.push_back(tbi::addition::from_angles(opt.geometry_args[0],
                                                   opt.geometry_args[1],
                                                   opt.geometry_args[2]));
    } else {
        Rng rng(opt.seed);
        for (int i = 0; i < opt.count; ++i) geoms.push_back(random_geometry(rng));
    }
    if (csv) {
        std::printf(
            "r31,r32,r21,theta21,theta31,theta32,k,L,"
            "product_residual,termwise_residual\n");
    } else {
        std::printf("[\n");
    }
    for (std::size_t i = 0; i < geoms.size(); ++i) {
        const auto& g = geoms[i];
        const double prod =
            tbi::addition::product_identity_residual(g, opt.wave_k, opt.lmax);
        const double termwise =
            tbi::addition::termwise_identity_residual(g, opt.wave_k, opt.big_l);
        if (csv) {
            std::printf("%s,%s,%s,%s,%s,%s,%s,%d,%.6E,%.6E\n",
                        format_value(g.r31).c_str(),
                        format_value(g.r32).c_str(),
                        format_value(g.r21()).c_str(),
                        format_value(g.theta21).c_str(),
                        format_value(g.theta31).c_str(),
                        format_value(g.theta32).c_str(),
                        format_value(opt.wave_k).c_str(), opt.big_l, prod,
                        termwise);
        } else {
            std::printf(
                "  {\"r31\":%s,\"r32\":%s,\"r21\":%s,\"theta21\":%s,"
                "\"theta31\":%s,\"theta32\":%s,\"k\":%s,\"L\":%d,"
                "\"product_residual\":%.6E,\"termwise_residual\":%.6E}%s\n",
                format_value(g.r31).c_str(), format_value(g.r32).c_str(),
                format_value(g.r21()).c_str(),
                format_value(g.theta21).c_str(),
                format_value(g.theta31).c_str(),
                format_value(g.theta32).c_str(),
                format_value(opt.wave_k).c_str(), opt.big_l, prod, termwise,
                i + 1 == geoms.size() ? "" : ",");
        }
    }
    if (!csv) std::printf("]\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{
        "Three-body exponential integrals: polynomial, Bessel-kernel and "
        "vacuum-polarization matrix elements with an independent quadrature "
        "oracle"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--tol", opt.tol, "Series / quadrature relative tolerance")
        ->envname("TBI_DEFAULT_TOL");
    app.add_option("--qmax", opt.qmax, "Series term cap override");
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", opt.precision, "Accumulator width")
        ->check(CLI::IsMember({"standard", "extended"}));

    std::function<int()> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-k", opt.k, "Power of r32");
        sub->add_option("-l", opt.l, "Power of r31");
        sub->add_option("-n", opt.n, "Power of r21");
        sub->add_option("-a", opt.a, "Exponent on r32");
        sub->add_option("-b", opt.b, "Exponent on r31");
        sub->add_option("-c", opt.c, "Exponent on r21");
    };

    CLI::App* gamma = app.add_subcommand(
        "gamma", "Polynomial integral Gamma_{k;l;n} (closed form)");
    add_common(gamma);
    gamma->add_option("--term", opt.term,
                      "Print log-magnitude of a single (k1,l1,n1) term")
        ->delimiter(',')
        ->expected(3);
    gamma->callback([&] { action = [&] { return run_gamma(opt); }; });

    auto add_basic = [&](CLI::App* sub) {
        sub->add_option("--ca", opt.bb_a, "Constant a");
        sub->add_option("--cb", opt.bb_b, "Constant b");
        sub->add_option("--cc", opt.bb_c, "Constant c");
        sub->add_option("--p", opt.bb_p, "Powers p1 p2 p3")->expected(3);
        sub->add_option("--q", opt.bb_q, "Slopes q0 q1 q2 q3")->expected(4);
        sub->add_option("--s", opt.bb_s, "Power of x");
    };
    CLI::App* basicb = app.add_subcommand(
        "basic-b", "Auxiliary 1D integral B(a,b,c;p;q;s)");
    add_basic(basicb);
    basicb->callback([&] { action = [&] { return run_basic_b(opt); }; });

    CLI::App* powerg = app.add_subcommand(
        "power-g", "Closed form G for pure power denominators");
    add_basic(powerg);
    powerg->callback([&] { action = [&] { return run_power_g(opt); }; });

    CLI::App* bessel = app.add_subcommand(
        "bessel", "Single spherical-Bessel integral B^(L) or j_L point value");
    add_common(bessel);
    bessel->add_option("--order", opt.order, "Bessel order (-1 allowed)");
    bessel->add_option("--V", opt.V, "Wave number");
    bessel->add_option("--radial-arg", opt.radial_arg,
                       "Which r carries the Bessel factor: 32, 31 or 21");
    bessel->add_option("--point", opt.point, "Evaluate j_L at this argument")
        ->trigger_on_parse();
    bessel->callback([&] {
        opt.have_point = bessel->count("--point") > 0;
        action = [&] { return run_bessel(opt); };
    });

    CLI::App* bessel2 = app.add_subcommand(
        "bessel2", "Double-Bessel integral B^(L1,L2), sin*sin, or product series");
    add_common(bessel2);
    bessel2->add_option("--orders", opt.orders, "Orders L1 L2")->expected(2);
    bessel2->add_option("--V", opt.V, "Wave number");
    bessel2->add_flag("--sin-sin", opt.sin_sin, "sin(Vr32)sin(Vr31) integral");
    bessel2->add_flag("--product", opt.product, "Pointwise j_L1*j_L2 series");
    bessel2->add_option("--ax", opt.ax, "Product mode: scale of x");
    bessel2->add_option("--by", opt.by, "Product mode: scale of y");
    bessel2->add_option("--x", opt.px, "Product mode: x");
    bessel2->add_option("--y", opt.py, "Product mode: y");
    bessel2->add_option("--pmax", opt.pmax, "Product mode: term cap");
    bessel2->callback([&] { action = [&] { return run_bessel2(opt); }; });

    CLI::App* ume = app.add_subcommand(
        "uehling-me", "Vacuum-polarization matrix element / kernels");
    add_common(ume);
    ume->add_option("--q1", opt.q1, "Charge 1");
    ume->add_option("--q2", opt.q2, "Charge 2");
    ume->add_option("--q3", opt.q3, "Charge 3");
    ume->add_option("--fine-structure", opt.fine_structure,
                    "Fine-structure constant");
    ume->add_option("--kernel", opt.kernel_pair,
                    "Print the pair kernel (21, 31 or 32) instead");
    ume->add_option("--shift", opt.shift, "Kernel exponential shift");
    ume->add_flag("--yukawa", opt.yukawa, "Screened Coulomb matrix element");
    ume->add_option("--mu", opt.mu, "Yukawa screening exponent");
    ume->add_option("--v0", opt.v0, "Yukawa strength");
    ume->add_option("--nodes", opt.me_nodes, "Quadrature resolution floor");
    ume->callback([&] { action = [&] { return run_uehling_me(opt); }; });

    CLI::App* upt = app.add_subcommand(
        "uehling-point", "Pointwise vacuum-polarization potential / K0, Ki_n");
    upt->add_option("--r", opt.r, "Distance from the charge");
    upt->add_option("--mode", opt.point_mode, "integral or ki")
        ->check(CLI::IsMember({"integral", "ki"}));
    upt->add_option("--charge", opt.nuclear_charge, "Source charge");
    upt->add_option("--fine-structure", opt.fine_structure,
                    "Fine-structure constant");
    upt->add_option("--ki", opt.ki_order,
                    "Print Ki_n(z) instead (0 selects K0)");
    upt->add_option("--z", opt.ki_z, "Argument for --ki");
    upt->callback([&] { action = [&] { return run_uehling_point(opt); }; });

    CLI::App* jint = app.add_subcommand(
        "j-integral", "Shifted-argument cosine integral J(t)");
    add_common(jint);
    jint->add_option("--t", opt.t, "Shift parameter");
    jint->add_option("--kappa-max", opt.kappa_max, "Series term cap");
    jint->callback([&] { action = [&] { return run_j_integral(opt); }; });

    CLI::App* series = app.add_subcommand(
        "series", "Matrix element of a polynomial(-damped) radial series");
    series->add_option("-a", opt.a, "Exponent on r32");
    series->add_option("-b", opt.b, "Exponent on r31");
    series->add_option("-c", opt.c, "Exponent on r21");
    series->add_option("--term", opt.series_terms,
                       "Term A,n or A,n,B; repeatable")
        ->required();
    series->add_flag("--damped", opt.damped, "Apply per-term damping B_n");
    series->callback([&] { action = [&] { return run_series(opt); }; });

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Brute-force quadrature, coordinate maps, 1D kernels");
    add_common(oracle);
    oracle->add_option("--kind", opt.kind,
                       "3D integrand: const, gamma, j0, cos, jj, jshift")
        ->check(CLI::IsMember({"const", "gamma", "j0", "cos", "jj", "jshift"}));
    oracle->add_option("--V", opt.V, "Wave number for j0/cos/jj kinds");
    oracle->add_option("--t", opt.t, "Shift for the jshift kind");
    oracle->add_option("--orders", opt.orders, "Orders for the jj kind")
        ->expected(2);
    oracle->add_option("--nodes", opt.nodes, "Nodes per axis");
    oracle->add_flag("--volume-weight", opt.volume_weight,
                     "Multiply by r32*r31*r21");
    oracle->add_option("--convert", opt.convert, "Coordinate map")
        ->check(CLI::IsMember({"r2u", "u2r"}));
    oracle->add_option("--coords", opt.coords, "Coordinates for --convert")
        ->expected(3);
    oracle->add_option("--quad1d", opt.quad1d, "1D kernel demo")
        ->check(CLI::IsMember({"expx", "xexp2", "cosh1"}));
    oracle->callback([&] { action = [&] { return run_oracle(opt); }; });

    CLI::App* table = app.add_subcommand(
        "table", "Recompute a published reference table");
    table->add_option("--which", opt.which, "I (polynomial) or II (Bessel)")
        ->required();
    table->callback([&] { action = [&] { return run_table(opt); }; });

    CLI::App* survey = app.add_subcommand(
        "addition-survey", "Plane-wave expansion identities and residuals");
    survey->add_option("--count", opt.count, "Number of random geometries");
    survey->add_option("--seed", opt.seed, "RNG seed");
    survey->add_option("--k", opt.wave_k, "Wave number");
    survey->add_option("--L", opt.big_l, "Order for the termwise residual");
    survey->add_option("--lmax", opt.lmax, "Truncation for the product check");
    survey->add_option("--rayleigh", opt.rayleigh_args,
                       "kr,cos_theta,L_max: partial-sum error vs exp")
        ->delimiter(',')
        ->expected(3);
    survey->add_option("--geometry", opt.geometry_args,
                       "r31,theta31,theta32: residuals for one geometry")
        ->delimiter(',')
        ->expected(3);
    survey->add_option("--legendre", opt.legendre_args, "L,x: P_L(x)")
        ->delimiter(',')
        ->expected(2);
    survey->callback([&] { action = [&] { return run_addition_survey(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 3;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "overflow: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
