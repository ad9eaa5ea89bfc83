#include "tbi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tbi/summation.hpp"

namespace tbi::quadrature {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Implicit-shift QL iteration for a symmetric tridiagonal matrix. d holds the
// diagonal, e the subdiagonal (e[n-1] ignored), z an arbitrary vector rotated
// along with the similarity transforms. On return d holds eigenvalues and z
// the corresponding components of its initial value in the eigenbasis.
void ql_symmetric_tridiagonal(std::vector<double>& d, std::vector<double>& e,
                              std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e[n - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        for (;;) {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) throw std::runtime_error("tridiagonal QL did not converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                double zi = z[i + 1];
                z[i + 1] = s * z[i] + c * zi;
                z[i] = c * z[i] - s * zi;
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n), zs(n);
    for (int i = 0; i < n; ++i) {
        ds[i] = d[order[i]];
        zs[i] = z[order[i]];
    }
    d = std::move(ds);
    z = std::move(zs);
}

}  // namespace

Nodes gauss_laguerre(int n) {
    if (n < 1) throw std::domain_error("gauss_laguerre: order must be >= 1");
    std::vector<double> d(n), e(n), z(n, 0.0);
    for (int i = 0; i < n; ++i) {
        d[i] = 2.0 * i + 1.0;
        e[i] = static_cast<double>(i + 1);
    }
    z[0] = 1.0;
    ql_symmetric_tridiagonal(d, e, z);
    Nodes out;
    out.x = std::move(d);
    out.w.resize(n);
    for (int i = 0; i < n; ++i) out.w[i] = z[i] * z[i];
    return out;
}

Nodes exp_sinh_axis(int n, double scale) {
    if (n < 4) throw std::domain_error("exp_sinh_axis: need at least 4 nodes");
    if (!(scale > 0.0)) throw std::domain_error("exp_sinh_axis: scale must be positive");
    const double t_max = 6.7;
    const double h = 2.0 * t_max / (n - 1);
    const double log_scale = std::log(scale);
    Nodes out;
    out.x.reserve(n);
    out.w.reserve(n);
    for (int i = 0; i < n; ++i) {
        double t = -t_max + i * h;
        double arg = kHalfPi * std::sinh(t) + log_scale;
        if (arg > 705.0 || arg < -690.0) continue;
        double x = std::exp(arg);
        double w = h * x * kHalfPi * std::cosh(t);
        // x alone fits in double range but the transform derivative can push
        // the weight past it; such nodes only matter for divergent integrands.
        if (!std::isfinite(w)) continue;
        out.x.push_back(x);
        out.w.push_back(w);
    }
    return out;
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                                       double rel_tol, int max_level) {
    if (!(scale > 0.0)) scale = 1.0;
    const double log_scale = std::log(scale);
    const double t_max = 6.7;

    auto weighted_f = [&](double t) -> double {
        double arg = kHalfPi * std::sinh(t) + log_scale;
        if (arg > 705.0 || arg < -690.0) return 0.0;
        double x = std::exp(arg);
        return f(x) * x * kHalfPi * std::cosh(t);
    };

    double h = 0.5;
    long evals = 0;
    CompensatedSum<double> level0;
    for (double t = -t_max; t <= t_max + 1e-12; t += h) {
        level0.add(weighted_f(t));
        ++evals;
    }
    double integral = h * level0.value();
    double err = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        CompensatedSum<double> odd;
        for (double t = -t_max + h; t <= t_max + 1e-12; t += 2.0 * h) {
            odd.add(weighted_f(t));
            ++evals;
        }
        double refined = 0.5 * integral + h * odd.value();
        err = std::fabs(refined - integral);
        integral = refined;
        if (level >= 2 && err <= rel_tol * std::max(1.0, std::fabs(integral))) {
            converged = true;
            break;
        }
    }
    return IntegralResult{integral, err, evals, converged};
}

IntegralResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                double rel_tol, int max_level) {
    const double d = 0.5 * (b - a);
    const double t_max = 6.1;

    auto weighted_f = [&](double t) -> double {
        double u = kHalfPi * std::sinh(t);
        if (std::fabs(u) > 350.0) return 0.0;
        double sech = 1.0 / std::cosh(u);
        double w = d * kHalfPi * std::cosh(t) * sech * sech;
        if (w == 0.0) return 0.0;
        // Distance to the nearer endpoint via 1 -+ tanh(u) = 2/(1 + e^{+-2u}).
        // Forming c + d*tanh(u) instead loses every digit of that distance
        // once tanh rounds toward +-1, which visibly biases integrands with
        // endpoint singularities.
        const double off = 2.0 * d / (1.0 + std::exp(2.0 * std::fabs(u)));
        const double x = u < 0.0 ? a + off : b - off;
        if (x <= a || x >= b) return 0.0;
        return f(x) * w;
    };

    double h = 0.5;
    long evals = 0;
    CompensatedSum<double> level0;
    for (double t = -t_max; t <= t_max + 1e-12; t += h) {
        level0.add(weighted_f(t));
        ++evals;
    }
    double integral = h * level0.value();
    double err = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        CompensatedSum<double> odd;
        for (double t = -t_max + h; t <= t_max + 1e-12; t += 2.0 * h) {
            odd.add(weighted_f(t));
            ++evals;
        }
        double refined = 0.5 * integral + h * odd.value();
        err = std::fabs(refined - integral);
        integral = refined;
        if (level >= 2 && err <= rel_tol * std::max(1.0, std::fabs(integral))) {
            converged = true;
            break;
        }
    }
    return IntegralResult{integral, err, evals, converged};
}

}  // namespace tbi::quadrature
