#pragma once

// Real Gamma function and modified Bessel function of the second kind for
// fractional order, the building blocks of every propagator profile and
// closed-form integral in this library.

#include <cmath>
#include <limits>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dimreg/detail/gauss_kronrod.hpp"
#include "dimreg/errors.hpp"

namespace dimreg {

inline constexpr double kPi = std::numbers::pi_v<double>;

namespace detail {

// sin(pi*x) with argument reduction to [-1/2, 1/2], exact near the zeros.
inline double sinpi(double x) {
    const double r = std::remainder(x, 1.0);
    const double n = std::round(x - r);
    const double s = std::sin(kPi * r);
    const bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
    return odd ? -s : s;
}

// Lanczos approximation (g = 7, 9 terms), valid for x >= 0.5.
inline double gamma_positive(double x) {
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7};
    double acc = c[0];
    for (int i = 1; i < 9; ++i) acc += c[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

}  // namespace detail

// Gamma function on the real line.  Throws on the poles x = 0, -1, -2, ...
inline double gamma(double x) {
    if (!std::isfinite(x)) throw std::domain_error("gamma: non-finite argument");
    if (x > 0.5) return detail::gamma_positive(x);
    if (x == std::floor(x))
        throw std::domain_error("gamma: pole at non-positive integer argument");
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (detail::sinpi(x) * detail::gamma_positive(1.0 - x));
}

// Order of a modified Bessel function; the library only ever needs (0, 2).
struct BesselOrder {
    double nu;

    explicit BesselOrder(double value) : nu(value) {
        if (!(value > 0.0 && value < 2.0))
            throw std::domain_error("BesselOrder: order must lie in (0, 2)");
    }
};

namespace detail {

// Coefficients of 1/Gamma(1+x) = sum a_k x^k (Abramowitz & Stegun 6.1.34).
inline constexpr double kInvGammaTaylor[16] = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950};

// Temme's Gamma1(mu) = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu).
inline double temme_gamma1(double mu) {
    if (std::fabs(mu) < 0.15) {
        // odd part of the Taylor series, safe from cancellation
        const double m2 = mu * mu;
        double acc = 0.0;
        double pw = 1.0;
        for (int k = 1; k < 16; k += 2) {
            acc += kInvGammaTaylor[k] * pw;
            pw *= m2;
        }
        return -acc;
    }
    return (1.0 / gamma(1.0 - mu) - 1.0 / gamma(1.0 + mu)) / (2.0 * mu);
}

inline double temme_gamma2(double mu) {
    return 0.5 * (1.0 / gamma(1.0 - mu) + 1.0 / gamma(1.0 + mu));
}

// Temme's series for K_mu(z), K_{mu+1}(z); |mu| <= 0.5 and z <= 2.
inline void temme_k_pair(double mu, double z, double& kmu, double& kmu1) {
    const double tol = std::numeric_limits<double>::epsilon();
    const double lz = std::log(2.0 / z);
    const double sigma = mu * lz;
    const double g1 = temme_gamma1(mu);
    const double g2 = temme_gamma2(mu);
    const double pimu = kPi * mu;
    const double fact = std::fabs(pimu) < 1e-12 ? 1.0 : pimu / std::sin(pimu);
    const double shc = std::fabs(sigma) < 1e-12 ? 1.0 : std::sinh(sigma) / sigma;
    double f = fact * (g1 * std::cosh(sigma) + g2 * lz * shc);
    const double emu = std::exp(sigma);  // (z/2)^{-mu}
    double p = 0.5 * emu / (g2 - mu * g1);
    double q = 0.5 / (emu * (g2 + mu * g1));
    const double w = 0.25 * z * z;
    double c = 1.0;
    double sum = f;
    double sum1 = p;
    for (int k = 1; k <= 500; ++k) {
        f = (k * f + p + q) / (k * k - mu * mu);
        p /= (k - mu);
        q /= (k + mu);
        const double h = p - k * f;
        c *= w / k;
        sum += c * f;
        sum1 += c * h;
        if (std::fabs(c * f) < std::fabs(sum) * tol) {
            kmu = sum;
            kmu1 = 2.0 * sum1 / z;
            return;
        }
    }
    throw std::runtime_error("besselk: Temme series did not converge");
}

// Steed/Thompson-Barnett continued fraction CF2 for K_mu(z), K_{mu+1}(z);
// |mu| <= 0.5 and z >= 2.
inline void cf2_k_pair(double mu, double z, double& kmu, double& kmu1) {
    const double tol = std::numeric_limits<double>::epsilon();
    const int max_iter = 50000;
    const double a1 = 0.25 - mu * mu;
    double a = -a1;
    double b = 2.0 * (z + 1.0);
    double d = 1.0 / b;
    double h = d;
    double dh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double s = 1.0 + q * dh;
    int it = 2;
    for (; it <= max_iter; ++it) {
        a -= 2 * (it - 1);
        c = -a * c / it;
        const double qn = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qn;
        q += c * qn;
        b += 2.0;
        d = 1.0 / (b + a * d);
        dh = (b * d - 1.0) * dh;
        h += dh;
        const double ds = q * dh;
        s += ds;
        if (std::fabs(ds) < std::fabs(s) * tol) break;
    }
    if (it > max_iter)
        throw std::runtime_error("besselk: continued fraction did not converge");
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * z)) * std::exp(-z) / s;
    kmu1 = kmu * (mu + z + 0.5 - h) / z;
}

// Full evaluation with a forced branch; the public entry point picks the
// branch by z, the seam test compares both at the switch point.
inline double besselk_branch(double nu, double z, bool series) {
    const int nl = static_cast<int>(std::floor(nu + 0.5));
    const double mu = nu - nl;
    double kmu, kmu1;
    if (series)
        temme_k_pair(mu, z, kmu, kmu1);
    else
        cf2_k_pair(mu, z, kmu, kmu1);
    if (nl == 0) return kmu;
    for (int i = 1; i < nl; ++i) {
        const double knext = (2.0 * (mu + i) / z) * kmu1 + kmu;
        kmu = kmu1;
        kmu1 = knext;
    }
    return kmu1;
}

inline constexpr double kBesselkZSwitch = 2.0;
inline constexpr double kBesselkZMin = 1e-8;
inline constexpr double kBesselkZMax = 700.0;

// Two leading terms of the small-z expansion,
//   K_nu(z) = (1/2)Gamma(nu)(z/2)^{-nu} [1 + w/(1-nu)] + (1/2)Gamma(-nu)(z/2)^nu,
// w = (z/2)^2.  Used by the quadrature engine below the besselk domain floor;
// relative error O(z^2) there.  Requires non-integer nu in (0, 2).
inline double log_besselk_small(double nu, double log_z) {
    const double l = log_z - std::numbers::ln2_v<double>;  // ln(z/2)
    const double lead = std::log(0.5 * gamma(nu)) - nu * l;
    const double ratio = gamma(-nu) / gamma(nu);
    double corr = ratio * std::exp(2.0 * nu * l);
    const double w = std::exp(2.0 * l);
    corr += w / (1.0 - nu);
    return lead + std::log1p(corr);
}

}  // namespace detail

// K_nu(z) for nu in (0, 2) and z in [1e-8, 700], to <= 1e-12 relative.
inline double besselk(BesselOrder order, double z) {
    if (!(z >= detail::kBesselkZMin && z <= detail::kBesselkZMax))
        throw std::domain_error("besselk: z outside [1e-8, 700]");
    return detail::besselk_branch(order.nu, z, z <= detail::kBesselkZSwitch);
}

inline double besselk(double nu, double z) { return besselk(BesselOrder(nu), z); }

// Leading small-z behaviour (1/2)Gamma(nu)(z/2)^{-nu}.
inline double besselk_small_z(BesselOrder order, double z) {
    if (!(z > 0.0 && z < 0.1))
        throw std::domain_error("besselk_small_z: requires 0 < z < 0.1");
    return 0.5 * gamma(order.nu) * std::pow(0.5 * z, -order.nu);
}

inline double besselk_small_z(double nu, double z) {
    return besselk_small_z(BesselOrder(nu), z);
}

// Independent evaluation of K_nu(z) through the cosine integral
// representation; after x = sinh t it reads
//   K_nu(z) = pi^{-1/2} (z/2)^{-nu} Gamma(1/2+nu)
//             * Re Integral_0^inf (1+x^2)^{-nu-1/2} e^{izx} dx.
// The contour is lifted to the horizontal line Im x = y0 < 1 (the integrand
// has branch points at x = +-i, and the vertical segment [0, i y0] is purely
// imaginary), which makes the e^{-z y0} smallness of the result explicit
// instead of leaving it to cancellation between oscillation chunks.  The
// remaining line is split into a short oscillatory head and a damped vertical
// leg.  Serves as the oracle for besselk.
inline double besselk_integral_rep(BesselOrder order, double z) {
    using cplx = std::complex<double>;
    const double nu = order.nu;
    if (!(nu > 0.0 && nu < 1.0))
        throw std::domain_error("besselk_integral_rep: order must be in (0, 1)");
    if (!(z >= 1e-6 && z <= 50.0))
        throw std::domain_error("besselk_integral_rep: z outside [1e-6, 50]");

    const double expo = nu + 0.5;
    const double y0 = 0.9;
    const double turn = 1.0;  // where the contour turns upward
    auto g = [&](cplx x) { return std::pow(1.0 + x * x, -expo); };

    const double abs_tol = 1e-13;
    double err_total = 0.0;

    // head: Integral_0^turn g(u + i y0) e^{izu} du
    auto head_part = [&](bool imag_part) {
        auto f = [&](double u) {
            const cplx v = g(cplx(u, y0)) * std::exp(cplx(0.0, z * u));
            return imag_part ? v.imag() : v.real();
        };
        const auto r = detail::integrate_interval(f, 0.0, turn, abs_tol, 48);
        err_total += r.error;
        return r.value;
    };
    const cplx head(head_part(false), head_part(true));

    // vertical leg: e^{izU} i Integral_0^inf g(U + i(y0+v)) e^{-zv} dv,
    // truncated where both the exponential and the algebraic decay are spent
    const double vmax = 50.0 / z + 10.0;
    auto leg_part = [&](bool imag_part) {
        auto f = [&](double v) {
            const cplx w = g(cplx(turn, y0 + v)) * std::exp(-z * v);
            return imag_part ? w.imag() : w.real();
        };
        double acc = 0.0;
        double a = 0.0, b = 1.0;
        while (a < vmax) {
            const auto r = detail::integrate_interval(f, a, std::min(b, vmax),
                                                      abs_tol, 48);
            acc += r.value;
            err_total += r.error;
            a = b;
            b *= 4.0;
        }
        return acc;
    };
    const cplx leg =
        std::exp(cplx(0.0, z * turn)) * cplx(0.0, 1.0) * cplx(leg_part(false),
                                                              leg_part(true));

    const double integral = std::exp(-z * y0) * (head + leg).real();
    if (err_total > 1e-9)
        throw QuadratureError(
            "besselk_integral_rep: oscillatory quadrature failed to converge",
            integral, err_total);

    return std::pow(kPi, -0.5) * std::pow(0.5 * z, -nu) * gamma(0.5 + nu) *
           integral;
}

inline double besselk_integral_rep(double nu, double z) {
    return besselk_integral_rep(BesselOrder(nu), z);
}

}  // namespace dimreg
