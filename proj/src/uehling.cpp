#include "tbi/uehling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tbi/core.hpp"
#include "tbi/quadrature.hpp"

namespace tbi::uehling {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

void validate_system(const UehlingSystem& sys, const char* where) {
    if (!(sys.fine_structure > 0.0) || !(sys.b > 0.0)) {
        throw std::domain_error(std::string(where) +
                                ": fine_structure and b must be positive");
    }
    if (std::fabs(sys.b * sys.fine_structure - 1.0) > 1e-9) {
        throw std::domain_error(std::string(where) +
                                ": b must equal 1/fine_structure");
    }
}

// The pair-21 expression; 31 and 32 enter through permuted arguments.
double ubar_base(double a, double b, double c, double s, const char* where) {
    const double X = a + b;
    const double Y = a + c + s;
    const double Z = b + c + s;
    if (!(X > 0.0) || !(Y > 0.0) || !(Z > 0.0)) {
        throw std::domain_error(std::string(where) +
                                ": shifted pair sums must be positive");
    }
    return 2.0 / (X * Y * Z) *
           (2.0 / (X * X) + 1.0 / (Z * X) + 1.0 / (Y * X) + 1.0 / (Z * Y));
}

// Integrand of the scaled potential B(z) = Int_1^inf e^{-z xi}
// (1 + 1/(2 xi^2)) sqrt(xi^2 - 1) / xi^2 dxi, written with xi = 1 + v^2 so
// the square-root endpoint becomes an analytic factor v^2 sqrt(2 + v^2) and
// the doubling estimate of the semi-infinite rule stays sharp.
double potential_integral(double z, double tol) {
    auto f = [z](double v) {
        // Far nodes of the rule can push v past the range where v^2 is
        // representable while the exponential has long underflowed; cut there
        // instead of letting 0 * inf poison the sum.
        if (z * v * v > 745.0) return 0.0;
        const double xi = 1.0 + v * v;
        return std::exp(-z * xi) * (1.0 + 0.5 / (xi * xi)) *
               2.0 * v * v * std::sqrt(2.0 + v * v) / (xi * xi);
    };
    const double scale = std::min(std::max(1.0 / std::sqrt(z), 1e-3), 1e3);
    const IntegralResult r = quadrature::integrate_semi_infinite(f, scale, tol);
    return r.value;
}

double cosh_integral(int n, double z, double tol) {
    // exp(-z cosh t) is below double underflow once cosh t > 745/z.
    const double arg = 745.0 / z;
    const double t_max =
        (arg > 1.0) ? std::acosh(arg) + 0.5 : 1.0;
    auto f = [n, z](double t) {
        const double c = std::cosh(t);
        double val = std::exp(-z * c);
        for (int i = 0; i < n; ++i) val /= c;
        return val;
    };
    return quadrature::integrate_finite(f, 0.0, t_max, tol).value;
}

}  // namespace

IntegralResult yukawa_matrix_element(const ExpParams& params, double mu,
                                     double V0) {
    if (!(mu >= 0.0)) {
        throw std::domain_error("yukawa_matrix_element: mu must be >= 0");
    }
    const ExpParams shifted{params.alpha + mu, params.beta, params.gamma};
    require_pairwise_positive(shifted, "yukawa_matrix_element");
    IntegralResult r = core::gamma_klm(PowerIndices{0, 1, 1}, shifted);
    r.value *= V0;
    r.abs_error_estimate *= std::fabs(V0);
    return r;
}

double ubar_kernel(Pair pair, const ExpParams& params, double shift) {
    if (!(shift >= 0.0)) {
        throw std::domain_error("ubar_kernel: shift must be >= 0");
    }
    const double a = params.alpha;
    const double b = params.beta;
    const double c = params.gamma;
    switch (pair) {
        case Pair::p21:
            return ubar_base(a, b, c, shift, "ubar_kernel");
        case Pair::p31:
            return ubar_base(c, a, b, shift, "ubar_kernel");
        case Pair::p32:
            return ubar_base(b, c, a, shift, "ubar_kernel");
    }
    throw std::domain_error("ubar_kernel: invalid pair selector");
}

IntegralResult uehling_matrix_element(const UehlingSystem& sys,
                                      const ExpParams& params,
                                      const XiQuadSpec& quad) {
    validate_system(sys, "uehling_matrix_element");
    require_pairwise_positive(params, "uehling_matrix_element");
    if (quad.node_count < 8) {
        throw std::domain_error(
            "uehling_matrix_element: node_count must be >= 8");
    }
    if (!(quad.tol > 0.0)) {
        throw std::domain_error("uehling_matrix_element: tol must be > 0");
    }
    const double c21 = sys.q2 * sys.q1;
    const double c31 = sys.q3 * sys.q1;
    const double c32 = sys.q3 * sys.q2;
    auto charge_weighted = [&](double xi) {
        const double s = 2.0 * sys.b * xi;
        return c21 * ubar_kernel(Pair::p21, params, s) +
               c31 * ubar_kernel(Pair::p31, params, s) +
               c32 * ubar_kernel(Pair::p32, params, s);
    };
    // xi = 1/u maps the tail to u -> 0 and the sqrt endpoint to u -> 1.
    auto g = [&](double u) {
        const double xi = 1.0 / u;
        return charge_weighted(xi) * (1.0 + 0.5 * u * u) *
               std::sqrt(1.0 - u * u) / u;
    };
    IntegralResult r = quadrature::integrate_finite(g, 0.0, 1.0, quad.tol);
    const double pre = 2.0 * sys.fine_structure / (3.0 * kPi);
    r.value *= pre;
    r.abs_error_estimate *= pre;
    return r;
}

double uehling_potential_point(const UehlingSystem& sys, double r,
                               PointMode mode) {
    validate_system(sys, "uehling_potential_point");
    if (!(r > 0.0)) {
        throw std::domain_error("uehling_potential_point: r must be > 0");
    }
    const double z = 2.0 * sys.b * r;
    double bracket = 0.0;
    switch (mode) {
        case PointMode::integral:
            bracket = potential_integral(z, 1e-15);
            break;
        case PointMode::ki_form:
            bracket = (1.0 + z * z / 12.0) * bessel_k0(z) -
                      (z / 12.0) * ki_n(1, z) -
                      (z * z / 12.0 + 5.0 / 6.0) * ki_n(2, z);
            break;
    }
    return 2.0 * sys.fine_structure * sys.nuclear_charge / (3.0 * kPi * r) *
           bracket;
}

double bessel_k0(double z) {
    if (!(z > 0.0)) {
        throw std::domain_error("bessel_k0: argument must be > 0");
    }
    if (z < 2.0) {
        // sum_k (psi(k+1) + ln 2 - ln z) (z/2)^{2k} / (k!)^2,
        // psi(k+1) = -EulerGamma + H_k.
        const double lz = std::log(z);
        double factor = 1.0;  // (z/2)^{2k} / (k!)^2
        double harmonic = 0.0;
        double sum = 0.0;
        for (int k = 0; k < 60; ++k) {
            if (k > 0) {
                factor *= z * z / (4.0 * k * k);
                harmonic += 1.0 / k;
            }
            const double term =
                (-kEulerGamma + harmonic + std::log(2.0) - lz) * factor;
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
        }
        return sum;
    }
    // The K0/Ki1/Ki2 combination used for the point potential cancels by a
    // factor that grows like z^3, so the underlying quadratures run well past
    // the accuracy the combined value needs.
    return cosh_integral(0, z, 1e-15);
}

double ki_n(int n, double z) {
    if (n < 1) {
        throw std::domain_error("ki_n: order must be >= 1");
    }
    if (!(z > 0.0)) {
        throw std::domain_error("ki_n: argument must be > 0");
    }
    return cosh_integral(n, z, 1e-15);
}

}  // namespace tbi::uehling
