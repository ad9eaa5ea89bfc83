#include "tbi/bessel_single.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "series_driver.hpp"
#include "tbi/core.hpp"
#include "tbi/loggamma.hpp"

namespace tbi::bessel {
namespace {

using detail::alternating_series;

constexpr long double kLn2 = 0.69314718055994530941723212145817657L;

// Rewrites a spec with the Bessel factor on r31 or r21 as the canonical r32
// form.  Swapping the two radial labels everywhere in the integrand swaps the
// corresponding power and exponential parameter.
BesselIntegralSpec canonical(const BesselIntegralSpec& spec) {
    BesselIntegralSpec out = spec;
    switch (spec.arg) {
        case RadialArg::r32:
            break;
        case RadialArg::r31:
            std::swap(out.idx.k, out.idx.l);
            std::swap(out.params.alpha, out.params.beta);
            break;
        case RadialArg::r21:
            std::swap(out.idx.k, out.idx.n);
            std::swap(out.params.alpha, out.params.gamma);
            break;
    }
    out.arg = RadialArg::r32;
    return out;
}

void validate(const BesselIntegralSpec& spec, const SeriesControl& ctl,
              const char* where) {
    require_non_negative(spec.idx, where);
    require_pairwise_positive(spec.params, where);
    require_series_control(ctl, where);
    if (!(spec.V >= 0.0)) {
        throw std::domain_error(std::string(where) + ": V must be >= 0");
    }
}

}  // namespace

IntegralResult bessel0_integral(const BesselIntegralSpec& spec,
                                const SeriesControl& ctl) {
    validate(spec, ctl, "bessel0_integral");
    const BesselIntegralSpec s = canonical(spec);
    if (s.V == 0.0) {
        return core::gamma_klm(s.idx, s.params);
    }
    const long double lv = std::log(static_cast<long double>(s.V));
    auto log_term = [&](int q) {
        PowerIndices idx{s.idx.k + 2 * q, s.idx.l, s.idx.n};
        return 2.0L * q * lv - log_factorial(2 * q + 1) +
               core::gamma_klm_log(idx, s.params);
    };
    return alternating_series(ctl, log_term, 0.0L);
}

IntegralResult bessel1_integral(const BesselIntegralSpec& spec,
                                const SeriesControl& ctl) {
    validate(spec, ctl, "bessel1_integral");
    const BesselIntegralSpec s = canonical(spec);
    if (s.V == 0.0) {
        return IntegralResult{0.0, 0.0, 0, true};
    }
    const long double lv = std::log(static_cast<long double>(s.V));
    auto log_term = [&](int q) {
        PowerIndices idx{s.idx.k + 2 * q + 1, s.idx.l, s.idx.n};
        return std::log(2.0L * q + 2.0L) + (2.0L * q + 1.0L) * lv -
               log_factorial(2 * q + 3) + core::gamma_klm_log(idx, s.params);
    };
    return alternating_series(ctl, log_term, 0.0L);
}

IntegralResult besselL_integral(const BesselIntegralSpec& spec,
                                const SeriesControl& ctl) {
    validate(spec, ctl, "besselL_integral");
    if (spec.L < 0) {
        throw std::domain_error("besselL_integral: L must be >= 0");
    }
    const BesselIntegralSpec s = canonical(spec);
    if (s.V == 0.0) {
        if (s.L == 0) return core::gamma_klm(s.idx, s.params);
        return IntegralResult{0.0, 0.0, 0, true};
    }
    const long double lv = std::log(static_cast<long double>(s.V));
    auto log_term = [&](int kappa) {
        PowerIndices idx{s.idx.k + s.L + 2 * kappa, s.idx.l, s.idx.n};
        return 2.0L * kappa * lv - kappa * kLn2 - log_factorial(kappa) -
               log_double_factorial_odd(s.L + kappa) +
               core::gamma_klm_log(idx, s.params);
    };
    return alternating_series(ctl, log_term, s.L * lv);
}

namespace {

// Ascending series x^L/(2L+1)!! * sum_m (-x^2/2)^m / (m! (2L+3)(2L+5)...(2L+2m+1)).
// Safe (terms monotonically decreasing) when x^2 <= 4L+6.
double jL_series(int L, double x) {
    const long double x2 = static_cast<long double>(x) * x;
    long double term =
        std::exp(L * std::log(static_cast<long double>(x)) -
                 log_double_factorial_odd(L));
    long double sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= -x2 / (2.0L * m * (2.0L * L + 2.0L * m + 1.0L));
        sum += term;
        if (std::fabs(term) < 1e-19L * std::fabs(sum)) break;
    }
    return static_cast<double>(sum);
}

double jL_forward(int L, double x) {
    double jm = std::sin(x) / x;                          // j_0
    double j = std::sin(x) / (x * x) - std::cos(x) / x;   // j_1
    for (int n = 1; n < L; ++n) {
        const double jp = (2.0 * n + 1.0) / x * j - jm;
        jm = j;
        j = jp;
    }
    return j;
}

double jL_backward(int L, double x) {
    const int start = L + 25 + static_cast<int>(x);
    long double jp = 0.0L;
    long double j = 1e-30L;
    long double saved = 0.0L;
    for (int n = start; n >= 1; --n) {
        const long double jm = (2.0L * n + 1.0L) / x * j - jp;
        jp = j;
        j = jm;
        if (n - 1 == L) saved = j;
        if (std::fabs(j) > 1e280L) {
            j *= 1e-280L;
            jp *= 1e-280L;
            saved *= 1e-280L;
        }
    }
    // j now holds the unnormalized j_0, jp the unnormalized j_1.  Normalize
    // against whichever reference value is farther from a zero.
    const long double j0 = std::sin(static_cast<long double>(x)) / x;
    const long double j1 =
        std::sin(static_cast<long double>(x)) / (static_cast<long double>(x) * x) -
        std::cos(static_cast<long double>(x)) / x;
    const long double scale =
        (std::fabs(j) >= std::fabs(jp)) ? j0 / j : j1 / jp;
    return static_cast<double>(saved * scale);
}

}  // namespace

double spherical_jL(int L, double x) {
    if (L < -1) {
        throw std::domain_error("spherical_jL: order must be >= -1");
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("spherical_jL: argument must be >= 0");
    }
    if (L == -1) {
        if (x == 0.0) {
            throw std::domain_error("spherical_jL: j_{-1} diverges at x = 0");
        }
        return std::cos(x) / x;
    }
    if (L == 0) {
        if (x < 1e-8) return 1.0 - x * x / 6.0;
        return std::sin(x) / x;
    }
    if (x == 0.0) return 0.0;
    if (L == 1) {
        if (x < 0.25) return jL_series(1, x);
        return std::sin(x) / (x * x) - std::cos(x) / x;
    }
    if (x * x <= 4.0 * L + 6.0) return jL_series(L, x);
    if (x >= L + 2.0) return jL_forward(L, x);
    return jL_backward(L, x);
}

}  // namespace tbi::bessel
