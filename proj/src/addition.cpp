#include "tbi/addition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tbi/bessel_single.hpp"

namespace tbi::addition {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool angle_in_range(double t) { return t >= -1e-12 && t <= kPi + 1e-12; }

}  // namespace

double TriangleGeometry::r21() const {
    const double x = r31 * std::cos(theta31) - r32 * std::cos(theta32);
    const double y = r31 * std::sin(theta31) - r32 * std::sin(theta32);
    return std::hypot(x, y);
}

void TriangleGeometry::validate(const char* where) const {
    if (!(r31 > 0.0) || !(r32 >= 0.0)) {
        throw std::domain_error(std::string(where) +
                                ": need r31 > 0 and r32 >= 0");
    }
    if (!angle_in_range(theta21) || !angle_in_range(theta31) ||
        !angle_in_range(theta32)) {
        throw std::domain_error(std::string(where) +
                                ": angles must lie in [0, pi]");
    }
    if (std::fabs(theta21 + theta31 + theta32 - kPi) > 1e-9) {
        throw std::domain_error(std::string(where) +
                                ": angles must sum to pi");
    }
    // The embedding puts k along +x and both position vectors at their
    // angles; the difference vector must then point along theta21.
    const double len = r21();
    if (r32 > 0.0 && len > 1e-12 * r31) {
        const double x = r31 * std::cos(theta31) - r32 * std::cos(theta32);
        const double y = r31 * std::sin(theta31) - r32 * std::sin(theta32);
        const double embedded = std::atan2(y, x);
        double diff = std::fabs(embedded - theta21);
        diff = std::min(diff, 2.0 * kPi - diff);
        if (diff > 1e-8) {
            throw std::domain_error(
                std::string(where) +
                ": theta21 inconsistent with the r31/r32 embedding");
        }
    }
}

TriangleGeometry from_angles(double r31, double theta31, double theta32) {
    if (!(r31 > 0.0)) {
        throw std::domain_error("from_angles: r31 must be > 0");
    }
    if (!angle_in_range(theta31) || !angle_in_range(theta32)) {
        throw std::domain_error("from_angles: angles must lie in [0, pi]");
    }
    const double theta21 = kPi - theta31 - theta32;
    if (!angle_in_range(theta21)) {
        throw std::domain_error("from_angles: theta31 + theta32 exceeds pi");
    }
    // Solve r31 u(theta31) = r21 u(theta21) + r32 u(theta32) for the two
    // unknown lengths (u = unit vector at the given angle from k).
    const double denom = std::sin(theta32 - theta21);
    if (std::fabs(denom) < 1e-12) {
        throw std::domain_error("from_angles: degenerate angle pair");
    }
    const double r21 = r31 * std::sin(theta32 - theta31) / denom;
    const double r32 = r31 * std::sin(theta31 - theta21) / denom;
    if (r21 < -1e-12 || r32 <= 1e-12) {
        throw std::domain_error(
            "from_angles: angle pair not realizable with positive lengths");
    }
    TriangleGeometry g;
    g.r31 = r31;
    g.r32 = r32;
    g.theta21 = theta21;
    g.theta31 = theta31;
    g.theta32 = theta32;
    g.validate("from_angles");
    return g;
}

double legendre_p(int L, double x) {
    if (L < 0) {
        throw std::domain_error("legendre_p: order must be >= 0");
    }
    if (L == 0) return 1.0;
    double pm = 1.0;
    double p = x;
    for (int n = 1; n < L; ++n) {
        const double pn = ((2.0 * n + 1.0) * x * p - n * pm) / (n + 1.0);
        pm = p;
        p = pn;
    }
    return p;
}

std::complex<double> rayleigh_partial_sum(double kr, double cos_theta,
                                          int L_max) {
    if (std::fabs(cos_theta) > 1.0 + 1e-12) {
        throw std::domain_error("rayleigh_partial_sum: |cos theta| > 1");
    }
    if (L_max < 0) {
        throw std::domain_error("rayleigh_partial_sum: L_max must be >= 0");
    }
    cos_theta = std::clamp(cos_theta, -1.0, 1.0);
    std::complex<double> sum = 0.0;
    double pm = 1.0;        // P_{L-1}
    double p = cos_theta;   // P_L, seeded for L=1
    static const std::complex<double> kPowersOfI[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    for (int L = 0; L <= L_max; ++L) {
        const double pl = (L == 0) ? 1.0 : p;
        sum += kPowersOfI[L % 4] * ((2.0 * L + 1.0) *
                                    bessel::spherical_jL(L, kr) * pl);
        if (L >= 1) {
            const double pn =
                ((2.0 * L + 1.0) * cos_theta * p - L * pm) / (L + 1.0);
            pm = p;
            p = pn;
        }
    }
    return sum;
}

double product_identity_residual(const TriangleGeometry& geom, double k,
                                 int L_max) {
    geom.validate("product_identity_residual");
    if (!(k >= 0.0)) {
        throw std::domain_error("product_identity_residual: k must be >= 0");
    }
    const std::complex<double> lhs =
        rayleigh_partial_sum(k * geom.r21(), std::cos(geom.theta21), L_max);
    const std::complex<double> rhs =
        rayleigh_partial_sum(k * geom.r31, std::cos(geom.theta31), L_max) *
        rayleigh_partial_sum(k * geom.r32, -std::cos(geom.theta32), L_max);
    return std::abs(lhs - rhs);
}

double termwise_identity_residual(const TriangleGeometry& geom, double k,
                                  int L) {
    geom.validate("termwise_identity_residual");
    if (!(k >= 0.0)) {
        throw std::domain_error("termwise_identity_residual: k must be >= 0");
    }
    if (L < 0) {
        throw std::domain_error("termwise_identity_residual: L must be >= 0");
    }
    const double lhs = (2.0 * L + 1.0) *
                       bessel::spherical_jL(L, k * geom.r21()) *
                       legendre_p(L, std::cos(geom.theta21));
    double rhs = 0.0;
    for (int l = 0; l <= L; ++l) {
        const double sign = ((L - l) % 2 == 0) ? 1.0 : -1.0;
        rhs += sign * (2.0 * l + 1.0) * (2.0 * (L - l) + 1.0) *
               bessel::spherical_jL(l, k * geom.r31) *
               bessel::spherical_jL(L - l, k * geom.r32) *
               legendre_p(l, std::cos(geom.theta31)) *
               legendre_p(L - l, std::cos(geom.theta32));
    }
    return std::fabs(lhs - rhs);
}

}  // namespace tbi::addition
