#include "tbi/core.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tbi/quadrature.hpp"
#include "tbi/summation.hpp"

namespace tbi::core {

namespace {

// Rounding-level relative error bound quoted for exact finite sums.
constexpr double kRoundoffRel = 1e-14;

long double log_term(int k1, int l1, int n1, const PowerIndices& idx, const ExpParams& p) {
    const long double lX = std::log(static_cast<long double>(p.alpha) + p.beta);
    const long double lY = std::log(static_cast<long double>(p.alpha) + p.gamma);
    const long double lZ = std::log(static_cast<long double>(p.beta) + p.gamma);
    const long M1 = idx.l - l1 + k1;
    const long M2 = idx.k - k1 + n1;
    const long M3 = idx.n - n1 + l1;
    return 0.6931471805599453094L  // Jacobian factor 2
           + log_binomial(idx.k, k1) + log_binomial(idx.l, l1) + log_binomial(idx.n, n1) +
           log_factorial(M1) - (M1 + 1) * lX + log_factorial(M2) - (M2 + 1) * lY +
           log_factorial(M3) - (M3 + 1) * lZ;
}

}  // namespace

long double gamma_klm_log(const PowerIndices& idx, const ExpParams& p) {
    require_non_negative(idx, "gamma_klm");
    require_pairwise_positive(p, "gamma_klm");
    std::vector<long double> logs;
    logs.reserve(static_cast<std::size_t>(idx.k + 1) * (idx.l + 1) * (idx.n + 1));
    for (int k1 = 0; k1 <= idx.k; ++k1) {
        for (int l1 = 0; l1 <= idx.l; ++l1) {
            for (int n1 = 0; n1 <= idx.n; ++n1) {
                logs.push_back(log_term(k1, l1, n1, idx, p));
            }
        }
    }
    long double peak = logs[0];
    for (long double lt : logs) peak = std::max(peak, lt);
    CompensatedSum<long double> sum;
    for (long double lt : logs) sum.add(std::exp(lt - peak));
    return peak + std::log(sum.value());
}

IntegralResult gamma_klm(const PowerIndices& idx, const ExpParams& p) {
    const long double lg = gamma_klm_log(idx, p);
    if (lg > 709.0L) {
        throw std::overflow_error("gamma_klm: value exceeds double range at indices (" +
                                  std::to_string(idx.k) + ", " + std::to_string(idx.l) + ", " +
                                  std::to_string(idx.n) + "), log value " +
                                  std::to_string(static_cast<double>(lg)));
    }
    const double value = static_cast<double>(std::exp(lg));
    IntegralResult r;
    r.value = value;
    r.abs_error_estimate = std::fabs(value) * kRoundoffRel;
    r.terms_used = static_cast<long>(idx.k + 1) * (idx.l + 1) * (idx.n + 1);
    r.converged = true;
    return r;
}

SignedLog log_term_magnitude(int k1, int l1, int n1, const PowerIndices& idx, const ExpParams& p) {
    require_non_negative(idx, "log_term_magnitude");
    require_pairwise_positive(p, "log_term_magnitude");
    if (k1 < 0 || k1 > idx.k || l1 < 0 || l1 > idx.l || n1 < 0 || n1 > idx.n) {
        throw std::domain_error("log_term_magnitude: inner indices must satisfy 0 <= k1 <= k etc.");
    }
    return SignedLog{log_term(k1, l1, n1, idx, p), 1};
}

namespace {

void require_basic_b_domain(const BasicBSpec& spec, const char* where) {
    if (!(spec.a > 0.0 && spec.b > 0.0 && spec.c > 0.0)) {
        throw std::domain_error(std::string(where) + ": exponents a, b, c must be positive");
    }
    if (!(spec.s > 0.0)) {
        throw std::domain_error(std::string(where) + ": denominator power s must be positive");
    }
    if (spec.p1 < 0.0 || spec.p2 < 0.0 || spec.p3 < 0.0) {
        throw std::domain_error(std::string(where) + ": powers p1, p2, p3 must be non-negative");
    }
    if (spec.q0 < 0.0 || spec.q1 < 0.0 || spec.q2 < 0.0 || spec.q3 < 0.0) {
        throw std::domain_error(std::string(where) + ": coefficients q0..q3 must be non-negative");
    }
}

}  // namespace

IntegralResult basic_b(const BasicBSpec& spec, double rel_tol) {
    require_basic_b_domain(spec, "basic_b");
    if (spec.q0 == 0.0 && spec.q1 == 0.0 && spec.q2 == 0.0 && spec.q3 == 0.0) {
        throw std::domain_error("basic_b: at least one of q0..q3 must be positive");
    }

    const double prefactor =
        std::exp(std::lgamma(spec.p1 + 1.0) + std::lgamma(spec.p2 + 1.0) +
                 std::lgamma(spec.p3 + 1.0) - std::lgamma(spec.s));

    // The x-integrand evaluated in log space so that huge nodes underflow to
    // zero instead of producing inf/inf.
    auto f = [&spec](double x) -> double {
        if (x <= 0.0) return 0.0;
        double lf = -spec.q0 * x + (spec.s - 1.0) * std::log(x) -
                    (spec.p1 + 1.0) * std::log(spec.a + spec.q1 * x) -
                    (spec.p2 + 1.0) * std::log(spec.b + spec.q2 * x) -
                    (spec.p3 + 1.0) * std::log(spec.c + spec.q3 * x);
        if (lf < -745.0) return 0.0;
        return std::exp(lf);
    };

    const double scale = spec.q0 > 0.0 ? std::max(spec.s, 1.0) / spec.q0 : 1.0;
    IntegralResult q = tbi::quadrature::integrate_semi_infinite(f, scale, rel_tol);
    q.value *= prefactor;
    q.abs_error_estimate *= prefactor;
    return q;
}

IntegralResult power_g(const BasicBSpec& spec) {
    if (spec.p1 < 0.0 || spec.p2 < 0.0 || spec.p3 < 0.0) {
        throw std::domain_error("power_g: powers p1, p2, p3 must be non-negative");
    }
    if (!(spec.q0 > 0.0 && spec.q1 > 0.0 && spec.q2 > 0.0 && spec.q3 > 0.0)) {
        throw std::domain_error("power_g: coefficients q0..q3 must be positive");
    }
    const double excess = spec.s - spec.p1 - spec.p2 - spec.p3 - 3.0;
    if (!(excess > 0.0)) {
        throw std::domain_error("power_g: diverges unless s > p1 + p2 + p3 + 3, got s = " +
                                std::to_string(spec.s));
    }
    const double log_value = std::lgamma(spec.p1 + 1.0) + std::lgamma(spec.p2 + 1.0) +
                             std::lgamma(spec.p3 + 1.0) - std::lgamma(spec.s) +
                             std::lgamma(excess) - (spec.p1 + 1.0) * std::log(spec.q1) -
                             (spec.p2 + 1.0) * std::log(spec.q2) -
                             (spec.p3 + 1.0) * std::log(spec.q3) - excess * std::log(spec.q0);
    IntegralResult r;
    r.value = std::exp(log_value);
    r.abs_error_estimate = r.value * kRoundoffRel;
    r.terms_used = 1;
    r.converged = true;
    return r;
}

PerimetricPoint to_perimetric(const RelativePoint& r) {
    PerimetricPoint u;
    u.u1 = 0.5 * (r.r31 + r.r21 - r.r32);
    u.u2 = 0.5 * (r.r21 + r.r32 - r.r31);
    u.u3 = 0.5 * (r.r32 + r.r31 - r.r21);
    if (u.u1 < 0.0 || u.u2 < 0.0 || u.u3 < 0.0) {
        throw std::domain_error("to_perimetric: distances violate the triangle conditions");
    }
    return u;
}

RelativePoint from_perimetric(const PerimetricPoint& u) {
    if (u.u1 < 0.0 || u.u2 < 0.0 || u.u3 < 0.0) {
        throw std::domain_error("from_perimetric: perimetric coordinates must be non-negative");
    }
    return RelativePoint{u.u2 + u.u3, u.u1 + u.u3, u.u1 + u.u2};
}

}  // namespace tbi::core
