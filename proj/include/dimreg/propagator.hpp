#pragma once

// The D = 1 - eps correlation function in its Bessel form, its radial first
// derivative, the regular part of its laplacian, and the two invariants of
// the second-derivative tensor.  The delta-function content of the laplacian
// lives only in the reduction rules of the integral catalogue; pointwise
// operations here are defined off the origin.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "dimreg/specfun.hpp"

namespace dimreg {

// Regularization point: mass scale m and eps with D = 1 - eps.
struct RegScheme {
    RegScheme(double mass, double epsilon) : m(mass), eps(epsilon) {
        if (!(mass > 0.0))
            throw std::domain_error("RegScheme: mass must be positive");
        if (!(epsilon > 0.0 && epsilon <= 0.5))
            throw std::domain_error("RegScheme: eps must lie in (0, 0.5]");
    }

    double m;
    double eps;

    double dim() const { return 1.0 - eps; }
    double nu_low() const { return 0.5 * dim(); }        // D/2
    double nu_high() const { return 1.0 - 0.5 * dim(); }  // 1 - D/2

    // propagator normalization m^{D-2} / (2 pi)^{D/2}
    double c_d() const {
        const double d = dim();
        return std::pow(m, d - 2.0) / std::pow(2.0 * kPi, 0.5 * d);
    }

    // sphere surface 2 pi^{D/2} / Gamma(D/2)
    double s_d() const {
        const double d = dim();
        return 2.0 * std::pow(kPi, 0.5 * d) / gamma(0.5 * d);
    }
};

// Radial evaluation point; z = m r is the reduced length.
struct RadialPoint {
    double r = 0.0;
    double z = 0.0;

    static RadialPoint at(const RegScheme& scheme, double r) {
        if (!(r >= 0.0))
            throw std::domain_error("RadialPoint: r must be non-negative");
        return {r, scheme.m * r};
    }
};

namespace detail {

inline void require_off_origin(const RadialPoint& p, const char* who) {
    if (!(p.r > 0.0))
        throw std::domain_error(std::string(who) +
                                ": defined off the origin only");
}

}  // namespace detail

// Delta(x) = c_D z^{1-D/2} K_{1-D/2}(z)
inline double delta(const RegScheme& scheme, const RadialPoint& p) {
    detail::require_off_origin(p, "delta");
    const double nu = scheme.nu_high();
    return scheme.c_d() * std::pow(p.z, nu) * besselk(nu, p.z);
}

// Delta(0) = m^{D-2} Gamma(1-D/2) / (4 pi)^{D/2}
inline double delta_at_zero(const RegScheme& scheme) {
    const double d = scheme.dim();
    return std::pow(scheme.m, d - 2.0) * gamma(1.0 - 0.5 * d) /
           std::pow(4.0 * kPi, 0.5 * d);
}

// Radial profile g(r) of the gradient, Delta_mu(x) = g(r) x_mu / r:
//   g(r) = -m c_D z^{1-D/2} K_{D/2}(z)
inline double delta_grad_radial(const RegScheme& scheme, const RadialPoint& p) {
    detail::require_off_origin(p, "delta_grad_radial");
    return -scheme.m * scheme.c_d() * std::pow(p.z, scheme.nu_high()) *
           besselk(scheme.nu_low(), p.z);
}

// Delta_mu(0) = 0 by antisymmetry.
inline double delta_grad_at_zero(const RegScheme&) { return 0.0; }

// Regular part of the laplacian off the origin: Delta_mumu = m^2 Delta.
inline double delta_lap_regular(const RegScheme& scheme, const RadialPoint& p) {
    detail::require_off_origin(p, "delta_lap_regular");
    return scheme.m * scheme.m * delta(scheme, p);
}

// Coincident-point rule Delta_mumu(0) = m^2 Delta(0).
inline double delta_lap_at_zero(const RegScheme& scheme) {
    return scheme.m * scheme.m * delta_at_zero(scheme);
}

// Invariants of the second-derivative tensor off the origin,
//   Delta_munu(x) = a x^_mu x^_nu + b (delta_munu - D x^_mu x^_nu),
// with a = m^2 Delta(x) and b = -c_D m^{2-D} r^{-D} z^{D/2} K_{D/2}(z).
struct HessianInvariants {
    double a;
    double b;
};

inline HessianInvariants hessian_invariants(const RegScheme& scheme,
                                            const RadialPoint& p) {
    detail::require_off_origin(p, "hessian_invariants");
    const double d = scheme.dim();
    const double a = scheme.m * scheme.m * delta(scheme, p);
    const double b = -scheme.c_d() * std::pow(scheme.m, 2.0 - d) *
                     std::pow(p.r, -d) * std::pow(p.z, 0.5 * d) *
                     besselk(scheme.nu_low(), p.z);
    return {a, b};
}

// Full contraction Delta_munu Delta_munu of the decomposition above; the
// cross term carries (1-D) and the traceless square D(D-1).
inline double hessian_contraction(const RegScheme& scheme,
                                  const HessianInvariants& h) {
    const double d = scheme.dim();
    return h.a * h.a + 2.0 * h.a * h.b * (1.0 - d) + h.b * h.b * d * (d - 1.0);
}

}  // namespace dimreg
