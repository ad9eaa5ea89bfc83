#pragma once

#include <stdexcept>
#include <string>

namespace tbi {

// Exponents (alpha, beta, gamma) of the weight exp(-alpha*r32 - beta*r31 - gamma*r21).
// Individual values may be negative; every pairwise sum must be positive so the
// integral converges.
struct ExpParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    bool pairwise_positive() const {
        return alpha + beta > 0.0 && alpha + gamma > 0.0 && beta + gamma > 0.0;
    }
};

inline void require_pairwise_positive(const ExpParams& p, const char* where) {
    if (!p.pairwise_positive()) {
        throw std::domain_error(std::string(where) +
                                ": every pairwise sum of (alpha, beta, gamma) must be positive, got (" +
                                std::to_string(p.alpha) + ", " + std::to_string(p.beta) + ", " +
                                std::to_string(p.gamma) + ")");
    }
}

// Integer powers (k, l, n) of (r32, r31, r21) in the integrand.
struct PowerIndices {
    int k = 0;
    int l = 0;
    int n = 0;

    bool non_negative() const { return k >= 0 && l >= 0 && n >= 0; }
};

inline void require_non_negative(const PowerIndices& idx, const char* where) {
    if (!idx.non_negative()) {
        throw std::domain_error(std::string(where) + ": power indices must be non-negative, got (" +
                                std::to_string(idx.k) + ", " + std::to_string(idx.l) + ", " +
                                std::to_string(idx.n) + ")");
    }
}

// A point in the relative coordinates: the three interparticle distances.
// They must satisfy the triangle conditions.
struct RelativePoint {
    double r32 = 0.0;
    double r31 = 0.0;
    double r21 = 0.0;
};

// A point in perimetric coordinates u1, u2, u3. Each is independently in [0, inf);
// the distances are recovered as r32 = u2 + u3, r31 = u1 + u3, r21 = u1 + u2.
struct PerimetricPoint {
    double u1 = 0.0;
    double u2 = 0.0;
    double u3 = 0.0;
};

// Outcome of any numerical evaluation: the value, an absolute error estimate
// (magnitude of the first omitted series term, or a grid-doubling difference),
// the number of terms or refinement steps consumed, and whether the requested
// tolerance was met.
struct IntegralResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long terms_used = 0;
    bool converged = false;
};

// Truncation policy for the alternating series: stop once `stall_count`
// consecutive terms are below rel_tol relative to the running sum, give up at
// q_max terms. extended_accumulator switches term assembly and accumulation
// to long double.
struct SeriesControl {
    double rel_tol = 1e-15;
    int q_max = 120;
    int stall_count = 3;
    bool extended_accumulator = false;
};

inline void require_series_control(const SeriesControl& ctl, const char* where) {
    if (!(ctl.rel_tol > 0.0) || ctl.q_max < 1 || ctl.stall_count < 1) {
        throw std::domain_error(std::string(where) +
                                ": series control requires rel_tol > 0, q_max >= 1, stall_count >= 1");
    }
}

}  // namespace tbi
