#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "dimreg/errors.hpp"

namespace dimreg::detail {

struct GkEstimate {
    double value = 0.0;
    double error = 0.0;
};

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK nodes).
// Error estimate is the raw |K15 - G7| difference, which is conservative on
// smooth panels and of the right order on rough ones.
template <class F>
GkEstimate gk15(F&& f, double a, double b) {
    static const double xgk[8] = {
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0};
    static const double wgk[8] = {
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714};
    static const double wg[4] = {
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327};

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(mid);
    double k15 = wgk[7] * fc;
    double g7 = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * xgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k15 += wgk[i] * fsum;
        if (i % 2 == 1) g7 += wg[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;
    return {k15, std::fabs(k15 - g7)};
}

struct AdaptiveResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

// Recursive bisection; each child inherits half of its parent's tolerance,
// so the per-panel budget stays proportional to panel length.  Panels at the
// depth cap are accepted with their (possibly large) error estimate; the
// caller decides whether the accumulated error is acceptable.
template <class F>
void integrate_interval_rec(F& f, double a, double b, double abs_tol,
                            int depth, int max_depth, AdaptiveResult& out) {
    const GkEstimate est = gk15(f, a, b);
    out.evaluations += 15;
    if (!std::isfinite(est.value)) {
        throw QuadratureError("non-finite integrand value in panel", out.value,
                              std::numeric_limits<double>::infinity());
    }
    if (est.error <= abs_tol || depth >= max_depth) {
        out.value += est.value;
        out.error += est.error;
        return;
    }
    const double mid = 0.5 * (a + b);
    integrate_interval_rec(f, a, mid, 0.5 * abs_tol, depth + 1, max_depth, out);
    integrate_interval_rec(f, mid, b, 0.5 * abs_tol, depth + 1, max_depth, out);
}

template <class F>
AdaptiveResult integrate_interval(F&& f, double a, double b, double abs_tol,
                                  int max_depth = 48) {
    AdaptiveResult out;
    integrate_interval_rec(f, a, b, abs_tol, 0, max_depth, out);
    return out;
}

}  // namespace dimreg::detail
