#pragma once

#include <functional>
#include <vector>

#include "tbi/types.hpp"

namespace tbi::quadrature {

// A one-dimensional rule: sum_i w[i] * f(x[i]) approximates the target
// integral, with any weight function absorbed into w.
struct Nodes {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Laguerre rule of order n for int_0^inf f(x) exp(-x) dx, computed by
// the Golub-Welsch eigenvalue method. Exact for polynomial f of degree
// <= 2n - 1. Weights include the exp(-x) factor.
Nodes gauss_laguerre(int n);

// Double-exponential (exp-sinh) node list for int_0^inf f(x) dx truncated to
// about n nodes, suitable for smooth integrands with algebraic or exponential
// decay. Weights include the transform derivative.
Nodes exp_sinh_axis(int n, double scale = 1.0);

// int_0^inf f(x) dx by the exp-sinh transform with level doubling. `scale`
// centers the rule near x = scale (use the inverse decay rate when known);
// the error estimate is the difference between the last two levels.
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                                       double rel_tol, int max_level = 11);

// int_a^b f(x) dx by tanh-sinh with level doubling; tolerates integrable
// endpoint singularities such as sqrt(1 - x^2).
IntegralResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                double rel_tol, int max_level = 11);

}  // namespace tbi::quadrature
