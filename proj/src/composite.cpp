#include "tbi/composite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tbi/bessel_single.hpp"
#include "tbi/core.hpp"
#include "tbi/summation.hpp"

namespace tbi::composite {

IntegralResult series_integral(const SeriesFunction& f, const ExpParams& params,
                               bool damped) {
    IntegralResult res;
    res.converged = true;
    CompensatedSum<double> value;
    CompensatedSum<double> err;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const SeriesTerm& term = f.terms[i];
        if (term.n < 0) {
            throw std::domain_error("series_integral: term " +
                                    std::to_string(i) + ": negative power");
        }
        ExpParams p = params;
        if (damped) {
            if (term.B < 0.0) {
                throw std::domain_error("series_integral: term " +
                                        std::to_string(i) +
                                        ": negative damping exponent");
            }
            p.alpha += term.B;
        }
        try {
            const IntegralResult g =
                core::gamma_klm(PowerIndices{term.n + 1, 1, 1}, p);
            value.add(term.A * g.value);
            err.add(std::fabs(term.A) * g.abs_error_estimate);
        } catch (const std::domain_error& e) {
            throw std::domain_error("series_integral: term " +
                                    std::to_string(i) + ": " + e.what());
        }
        ++res.terms_used;
    }
    res.value = value.value();
    res.abs_error_estimate = err.value();
    return res;
}

IntegralResult bessel_neg1_integral(const PowerIndices& idx,
                                    const ExpParams& params, double V,
                                    const SeriesControl& ctl) {
    require_non_negative(idx, "bessel_neg1_integral");
    if (idx.k < 1) {
        throw std::domain_error(
            "bessel_neg1_integral: k must be >= 1 (1/r32 pole of j_{-1})");
    }
    bessel::BesselIntegralSpec spec0;
    spec0.idx = PowerIndices{idx.k - 1, idx.l, idx.n};
    spec0.params = params;
    spec0.V = V;
    bessel::BesselIntegralSpec spec1;
    spec1.idx = idx;
    spec1.params = params;
    spec1.V = V;
    const IntegralResult b0 = bessel::bessel0_integral(spec0, ctl);
    const IntegralResult b1 = bessel::bessel1_integral(spec1, ctl);
    IntegralResult res;
    res.value = b0.value - V * b1.value;
    res.abs_error_estimate =
        b0.abs_error_estimate + std::fabs(V) * b1.abs_error_estimate;
    res.terms_used = b0.terms_used + b1.terms_used;
    res.converged = b0.converged && b1.converged;
    return res;
}

IntegralResult j_integral(const JSpec& spec, const SeriesControl& ctl) {
    require_non_negative(spec.idx, "j_integral");
    require_pairwise_positive(spec.params, "j_integral");
    require_series_control(ctl, "j_integral");
    if (spec.kappa_max < 1) {
        throw std::domain_error("j_integral: kappa_max must be >= 1");
    }
    const PowerIndices shifted{spec.idx.k + 1, spec.idx.l, spec.idx.n};

    IntegralResult res;
    CompensatedSum<double> value;
    CompensatedSum<double> err;

    const IntegralResult head =
        bessel_neg1_integral(shifted, spec.params, 1.0, ctl);
    value.add(head.value);
    err.add(head.abs_error_estimate);
    res.terms_used = 1;
    res.converged = head.converged;
    if (spec.t == 0.0) {
        res.value = value.value();
        res.abs_error_estimate = err.value();
        return res;
    }

    auto term_at = [&](int kappa) {
        bessel::BesselIntegralSpec bs;
        bs.idx = shifted;
        bs.params = spec.params;
        bs.V = 1.0;
        bs.L = kappa - 1;
        return bessel::besselL_integral(bs, ctl);
    };

    double coef = 1.0;  // t^kappa / kappa!
    int stalled = 0;
    bool tail_converged = false;
    for (int kappa = 1; kappa <= spec.kappa_max; ++kappa) {
        coef *= spec.t / kappa;
        const IntegralResult inner = term_at(kappa);
        const double term = coef * inner.value;
        if (stalled >= ctl.stall_count) {
            res.abs_error_estimate = err.value() + std::fabs(term);
            tail_converged = true;
            break;
        }
        value.add(term);
        err.add(std::fabs(coef) * inner.abs_error_estimate);
        ++res.terms_used;
        res.converged = res.converged && inner.converged;
        if (std::fabs(term) <= ctl.rel_tol * std::fabs(value.value())) {
            ++stalled;
        } else {
            stalled = 0;
        }
    }
    if (!tail_converged) {
        // Cap reached: estimate the first omitted term.
        const double next_coef = coef * spec.t / (spec.kappa_max + 1);
        const IntegralResult next = term_at(spec.kappa_max + 1);
        res.abs_error_estimate =
            err.value() + std::fabs(next_coef * next.value);
        if (stalled < ctl.stall_count) res.converged = false;
    }
    res.value = value.value();
    return res;
}

}  // namespace tbi::composite
