#pragma once

#include <cmath>

#include "tbi/summation.hpp"
#include "tbi/types.hpp"

namespace tbi::detail {

// Shared driver for alternating series whose terms are assembled in log
// space.  `log_term(q)` returns the log-magnitude of term q; signs alternate
// starting with +.  Truncation: once `stall_count` consecutive terms fall
// below rel_tol times the partial sum, stop and report the magnitude of the
// next (first omitted) term as the error estimate.  If the cap is reached
// first, the result is flagged non-converged with the same estimate.
template <typename LogTerm>
IntegralResult alternating_series(const SeriesControl& ctl, LogTerm log_term,
                                  long double log_prefactor) {
    IntegralResult res;
    CompensatedSum<double> acc;
    CompensatedSum<long double> acc_ext;
    int stalled = 0;
    double sum = 0.0;
    for (int q = 0; q <= ctl.q_max; ++q) {
        const long double mag_l = std::exp(log_term(q) + log_prefactor);
        const double mag = static_cast<double>(mag_l);
        if (stalled >= ctl.stall_count) {
            res.abs_error_estimate = mag;
            res.converged = true;
            break;
        }
        if (q == ctl.q_max) {
            res.abs_error_estimate = mag;
            res.converged = false;
            break;
        }
        const double term = (q % 2 == 0) ? mag : -mag;
        if (ctl.extended_accumulator) {
            acc_ext.add(term);
            sum = static_cast<double>(acc_ext.value());
        } else {
            acc.add(term);
            sum = acc.value();
        }
        ++res.terms_used;
        if (mag <= ctl.rel_tol * std::fabs(sum)) {
            ++stalled;
        } else {
            stalled = 0;
        }
    }
    res.value = sum;
    return res;
}

}  // namespace tbi::detail
