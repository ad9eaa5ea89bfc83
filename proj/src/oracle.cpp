#include "tbi/oracle.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <vector>

#include "tbi/quadrature.hpp"
#include "tbi/summation.hpp"

namespace tbi::oracle {

namespace {

struct Axis {
    std::vector<double> x;
    std::vector<double> w;
};

Axis make_axis(double rate, int nodes, AxisRule rule) {
    Axis axis;
    if (rule == AxisRule::laguerre) {
        if (!(rate > 0.0)) {
            throw std::domain_error("quad3d_perimetric: laguerre axes need a positive decay rate");
        }
        auto gl = tbi::quadrature::gauss_laguerre(nodes);
        axis.x.resize(gl.x.size());
        axis.w.resize(gl.w.size());
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            axis.x[i] = gl.x[i] / rate;
            axis.w[i] = gl.w[i] / rate;
        }
    } else {
        auto de = tbi::quadrature::exp_sinh_axis(nodes, 1.0);
        axis.x = std::move(de.x);
        axis.w = std::move(de.w);
    }
    return axis;
}

// Fixed-order tensor sum, parallel over contiguous slabs of the u1 axis. The
// slab partition and the reduction order do not depend on the thread count,
// so results are bit-stable across machines with different core counts.
double tensor_sum(const std::function<double(double, double, double)>& g, const Axis& a1,
                  const Axis& a2, const Axis& a3) {
    const int n1 = static_cast<int>(a1.x.size());
    const int kSlabs = 16;
    std::vector<std::future<long double>> parts;
    parts.reserve(kSlabs);
    for (int slab = 0; slab < kSlabs; ++slab) {
        const int begin = static_cast<int>(static_cast<long>(n1) * slab / kSlabs);
        const int end = static_cast<int>(static_cast<long>(n1) * (slab + 1) / kSlabs);
        parts.push_back(std::async(std::launch::async, [&, begin, end]() -> long double {
            CompensatedSum<long double> sum;
            for (int i1 = begin; i1 < end; ++i1) {
                const double u1 = a1.x[i1];
                const double w1 = a1.w[i1];
                for (std::size_t i2 = 0; i2 < a2.x.size(); ++i2) {
                    const double u2 = a2.x[i2];
                    const double w12 = w1 * a2.w[i2];
                    for (std::size_t i3 = 0; i3 < a3.x.size(); ++i3) {
                        const double gv = g(u1, u2, a3.x[i3]);
                        // Skip exact zeros before touching the weights: far
                        // double-exponential nodes carry near-overflow weights
                        // that an underflowed integrand must not multiply.
                        if (gv == 0.0) continue;
                        sum.add(gv * w12 * a3.w[i3]);
                    }
                }
            }
            return sum.value();
        }));
    }
    CompensatedSum<long double> total;
    for (auto& part : parts) total.add(part.get());
    return static_cast<double>(total.value());
}

}  // namespace

double quad3d_perimetric(const std::function<double(double, double, double)>& g,
                         const std::array<double, 3>& rates, int nodes_per_axis, AxisRule rule) {
    if (nodes_per_axis < 4) {
        throw std::domain_error("quad3d_perimetric: need at least 4 nodes per axis");
    }
    Axis a1 = make_axis(rates[0], nodes_per_axis, rule);
    Axis a2 = make_axis(rates[1], nodes_per_axis, rule);
    Axis a3 = make_axis(rates[2], nodes_per_axis, rule);
    return tensor_sum(g, a1, a2, a3);
}

IntegralResult quad3d(const OracleSpec& spec) {
    if (!spec.integrand) throw std::domain_error("quad3d: integrand must be set");
    if (spec.nodes_per_axis < 16) {
        throw std::domain_error("quad3d: nodes_per_axis must be at least 16");
    }
    require_pairwise_positive(spec.params, "quad3d");

    const std::array<double, 3> rates = {spec.params.beta + spec.params.gamma,
                                         spec.params.alpha + spec.params.gamma,
                                         spec.params.alpha + spec.params.beta};
    const bool vw = spec.include_volume_weight;
    auto g = [&](double u1, double u2, double u3) -> double {
        RelativePoint r{u2 + u3, u1 + u3, u1 + u2};
        double v = spec.integrand(r);
        if (vw) v *= r.r32 * r.r31 * r.r21;
        return v;
    };

    const double coarse = 2.0 * quad3d_perimetric(g, rates, spec.nodes_per_axis);
    const double fine = 2.0 * quad3d_perimetric(g, rates, 2 * spec.nodes_per_axis);

    IntegralResult r;
    r.value = fine;
    r.abs_error_estimate = std::fabs(fine - coarse);
    const long n = spec.nodes_per_axis;
    r.terms_used = n * n * n + 8 * n * n * n;
    r.converged = r.abs_error_estimate <= 1e-9 * std::max(1.0, std::fabs(fine));
    return r;
}

IntegralResult quad1d_semiinfinite(const std::function<double(double)>& f, double decay_rate,
                                   double rel_tol) {
    const double scale = decay_rate > 0.0 ? 1.0 / decay_rate : 1.0;
    return tbi::quadrature::integrate_semi_infinite(f, scale, rel_tol);
}

}  // namespace tbi::oracle
