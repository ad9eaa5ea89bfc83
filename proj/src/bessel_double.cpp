#include "tbi/bessel_double.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "series_driver.hpp"
#include "tbi/core.hpp"
#include "tbi/loggamma.hpp"
#include "tbi/summation.hpp"

namespace tbi::bessel {
namespace {

constexpr long double kLn2 = 0.69314718055994530941723212145817657L;

// Log-sum-exp over a list of log-magnitudes (all terms positive).
long double log_sum(const std::vector<long double>& logs) {
    long double m = logs.front();
    for (long double v : logs) m = std::max(m, v);
    CompensatedSum<long double> acc;
    for (long double v : logs) acc.add(std::exp(v - m));
    return m + std::log(acc.value());
}

}  // namespace

SeriesControl double_series_control() {
    SeriesControl ctl;
    ctl.q_max = 150;
    return ctl;
}

IntegralResult double_bessel_integral(const DoubleBesselSpec& spec,
                                      const SeriesControl& ctl) {
    require_non_negative(spec.idx, "double_bessel_integral");
    require_pairwise_positive(spec.params, "double_bessel_integral");
    require_series_control(ctl, "double_bessel_integral");
    if (!(spec.V >= 0.0)) {
        throw std::domain_error("double_bessel_integral: V must be >= 0");
    }
    if (spec.L1 < 0 || spec.L2 < 0) {
        throw std::domain_error("double_bessel_integral: orders must be >= 0");
    }
    if (spec.V == 0.0) {
        if (spec.L1 == 0 && spec.L2 == 0) {
            return core::gamma_klm(spec.idx, spec.params);
        }
        return IntegralResult{0.0, 0.0, 0, true};
    }
    const long double lv = std::log(static_cast<long double>(spec.V));
    auto log_term = [&](int p) {
        std::vector<long double> inner(p + 1);
        for (int q = 0; q <= p; ++q) {
            PowerIndices idx{spec.idx.k + spec.L1 + 2 * q,
                             spec.idx.l + spec.L2 + 2 * (p - q), spec.idx.n};
            inner[q] = log_binomial(p, q) -
                       log_double_factorial_odd(spec.L1 + q) -
                       log_double_factorial_odd(spec.L2 + p - q) +
                       core::gamma_klm_log(idx, spec.params);
        }
        return log_sum(inner) + 2.0L * p * lv - p * kLn2 - log_factorial(p);
    };
    return detail::alternating_series(ctl, log_term, (spec.L1 + spec.L2) * lv);
}

IntegralResult sin_sin_integral(const PowerIndices& idx, const ExpParams& params,
                                double V, const SeriesControl& ctl) {
    require_non_negative(idx, "sin_sin_integral");
    require_pairwise_positive(params, "sin_sin_integral");
    require_series_control(ctl, "sin_sin_integral");
    if (!(V >= 0.0)) {
        throw std::domain_error("sin_sin_integral: V must be >= 0");
    }
    if (V == 0.0) {
        return IntegralResult{0.0, 0.0, 0, true};
    }
    const long double lv = std::log(static_cast<long double>(V));
    auto log_term = [&](int kappa) {
        std::vector<long double> inner(kappa + 1);
        for (int mu = 0; mu <= kappa; ++mu) {
            PowerIndices shifted{idx.k + 2 * mu + 1,
                                 idx.l + 2 * (kappa - mu) + 1, idx.n};
            inner[mu] = log_binomial(2 * kappa + 2, 2 * mu + 1) +
                        core::gamma_klm_log(shifted, params);
        }
        return log_sum(inner) + (2.0L * kappa + 2.0L) * lv -
               log_factorial(2 * kappa + 2);
    };
    return detail::alternating_series(ctl, log_term, 0.0L);
}

double product_jj_series(int L1, int L2, double a, double b, double x, double y,
                         int p_max) {
    if (L1 < 0 || L2 < 0) {
        throw std::domain_error("product_jj_series: orders must be >= 0");
    }
    if (p_max < 1) {
        throw std::domain_error("product_jj_series: p_max must be >= 1");
    }
    const long double ax2 = static_cast<long double>(a) * a * x * x;
    const long double by2 = static_cast<long double>(b) * b * y * y;
    CompensatedSum<long double> acc;
    for (int p = 0; p < p_max; ++p) {
        long double inner = 0.0L;
        for (int q = 0; q <= p; ++q) {
            const long double lc =
                log_binomial(p, q) - log_double_factorial_odd(L1 + q) -
                log_double_factorial_odd(L2 + p - q);
            long double mono = std::exp(lc);
            for (int i = 0; i < q; ++i) mono *= ax2;
            for (int i = 0; i < p - q; ++i) mono *= by2;
            inner += mono;
        }
        const long double term =
            inner * std::exp(-p * kLn2 - log_factorial(p));
        acc.add((p % 2 == 0) ? term : -term);
    }
    long double pre = 1.0L;
    for (int i = 0; i < L1; ++i) pre *= static_cast<long double>(a) * x;
    for (int i = 0; i < L2; ++i) pre *= static_cast<long double>(b) * y;
    return static_cast<double>(pre * acc.value());
}

}  // namespace tbi::bessel
