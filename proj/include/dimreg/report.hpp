#pragma once

// Machine-readable verification reports.  A report evaluates the integral
// catalogue, the eight diagrams and the energy coefficients on an eps grid,
// extrapolates to eps -> 0 and compares against the reference limits.
// Serialization is deterministic: fixed entry order, fixed key order and
// 17-significant-digit floats, so identical flags give identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dimreg/diagrams.hpp"
#include "dimreg/extrapolate.hpp"

namespace dimreg {

struct VerifyParams {
    double m = 1.0;
    std::vector<double> eps_grid{kDefaultEpsGrid.begin(), kDefaultEpsGrid.end()};
    double tol_quadrature = 1e-8;
    double tol_limit = 1e-3;
    int degree = kDefaultRichardsonDegree;
    // single-entry reports may run on grids too short to extrapolate; the
    // full verification always demands the limit comparison
    bool require_limits = true;
};

struct EntrySample {
    double eps = 0.0;
    double analytic = std::numeric_limits<double>::quiet_NaN();
    double quadrature = std::numeric_limits<double>::quiet_NaN();
    double quad_error = std::numeric_limits<double>::quiet_NaN();
    bool failed = false;
};

struct ReportEntry {
    std::string name;
    std::string kind;  // "integral", "diagram" or "energy"
    double reference_limit = std::numeric_limits<double>::quiet_NaN();
    double analytic_limit = std::numeric_limits<double>::quiet_NaN();
    double rel_err_analytic = std::numeric_limits<double>::quiet_NaN();
    std::vector<EntrySample> samples;
    double extrapolated = std::numeric_limits<double>::quiet_NaN();
    double extrapolation_error = std::numeric_limits<double>::quiet_NaN();
    double rel_err_extrapolated = std::numeric_limits<double>::quiet_NaN();
    bool pass = false;
};

struct ReportDocument {
    std::string command;
    VerifyParams params;
    std::vector<ReportEntry> entries;
    bool pass = false;
};

namespace detail {

// quadrature-backed values of the independent integrals at one eps
struct PrimitiveSet {
    double eps = 0.0;
    bool ok = false;
    std::string error;
    IntegralResult q_delta_sq, q_grad_sq, q_delta_4, q_dsq_gradsq, q_i_singular;
    double a_delta_sq = 0.0, a_grad_sq = 0.0, a_lap_sq = 0.0;
    double a_delta_4 = 0.0, a_dsq_gradsq = 0.0, a_i_singular = 0.0;
    double d0 = 0.0;
    double omitted = 0.0;
    double omitted_closed = 0.0;
    double sum_rule_analytic = 0.0;
    double sum_rule_scale = 0.0;
};

inline PrimitiveSet evaluate_primitives(double m, double eps, double rel_tol) {
    PrimitiveSet p;
    p.eps = eps;
    try {
        const RegScheme s(m, eps);
        p.d0 = delta_at_zero(s);
        const auto dsq = int_delta_sq(s, rel_tol);
        const auto grad = int_grad_sq(s, rel_tol);
        const auto d4 = int_delta_4(s, rel_tol);
        const auto dg = int_dsq_gradsq(s, rel_tol);
        const auto id = i_singular(s, rel_tol);
        p.q_delta_sq = dsq.quadrature.value();
        p.q_grad_sq = grad.quadrature.value();
        p.q_delta_4 = d4.quadrature.value();
        p.q_dsq_gradsq = dg.quadrature.value();
        p.q_i_singular = id.quadrature.value();
        p.a_delta_sq = dsq.analytic.value;
        p.a_grad_sq = grad.analytic.value;
        p.a_lap_sq = int_lap_sq(s, rel_tol).analytic.value;
        p.a_delta_4 = d4.analytic.value;
        p.a_dsq_gradsq = dg.analytic.value;
        p.a_i_singular = id.analytic.value;
        p.omitted = omitted_term(s, rel_tol);
        p.omitted_closed = omitted_term_closed_form(s);
        p.sum_rule_analytic = delta_sq_sum_rule_analytic(s);
        p.sum_rule_scale = delta_sq_sum_rule_scale(s);
        p.ok = true;
    } catch (const std::exception& e) {
        p.error = e.what();
    }
    return p;
}

inline int parallelism_cap() {
    const char* env = std::getenv("DIMREG_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    const long v = std::strtol(env, nullptr, 10);
    if (v <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return static_cast<int>(v);
}

inline std::vector<PrimitiveSet> evaluate_grid(double m,
                                               const std::vector<double>& grid,
                                               double rel_tol) {
    const int cap = parallelism_cap();
    std::vector<PrimitiveSet> out(grid.size());
    if (cap <= 1 || grid.size() <= 1) {
        for (size_t i = 0; i < grid.size(); ++i)
            out[i] = evaluate_primitives(m, grid[i], rel_tol);
        return out;
    }
    size_t next = 0;
    while (next < grid.size()) {
        const size_t batch =
            std::min(static_cast<size_t>(cap), grid.size() - next);
        std::vector<std::future<PrimitiveSet>> futures;
        futures.reserve(batch);
        for (size_t j = 0; j < batch; ++j) {
            const double eps = grid[next + j];
            futures.push_back(std::async(std::launch::async,
                                         [m, eps, rel_tol] {
                                             return evaluate_primitives(
                                                 m, eps, rel_tol);
                                         }));
        }
        for (size_t j = 0; j < batch; ++j) out[next + j] = futures[j].get();
        next += batch;
    }
    return out;
}

inline double safe_rel_err(double got, double want) {
    if (want == 0.0) return std::fabs(got);
    return std::fabs(got - want) / std::fabs(want);
}

inline bool extrapolate_samples(const std::vector<EntrySample>& samples,
                                int degree, bool use_quadrature,
                                ReportEntry& entry) {
    std::vector<EpsSample> pts;
    for (const auto& s : samples) {
        const double v = use_quadrature ? s.quadrature : s.analytic;
        if (s.failed || !std::isfinite(v)) return false;
        pts.push_back({s.eps, v});
    }
    if (pts.size() < 3) return false;
    const int deg = std::min<int>(degree, static_cast<int>(pts.size()) - 1);
    const auto r = richardson(EpsSeries(pts), deg);
    entry.extrapolated = r.limit;
    entry.extrapolation_error = r.err_estimate;
    return true;
}

}  // namespace detail

// Evaluates everything on the grid and assembles the full document.
inline ReportDocument build_verify_report(const VerifyParams& params) {
    if (params.require_limits && params.eps_grid.size() < 3)
        throw std::invalid_argument(
            "verify: extrapolation needs at least 3 eps samples");
    ReportDocument doc;
    doc.command = "verify";
    doc.params = params;
    const double m = params.m;
    const double m2 = m * m;
    const double rel_tol =
        std::clamp(0.1 * params.tol_quadrature, 1e-12, 1e-4);
    const auto prim = detail::evaluate_grid(m, params.eps_grid, rel_tol);

    auto finish_limit_entry = [&](ReportEntry& e, bool per_eps_dual_ok,
                                  double analytic_tolerance) {
        e.rel_err_analytic =
            detail::safe_rel_err(e.analytic_limit, e.reference_limit);
        bool ok = per_eps_dual_ok && e.rel_err_analytic <= analytic_tolerance;
        if (detail::extrapolate_samples(e.samples, params.degree, true, e)) {
            e.rel_err_extrapolated =
                detail::safe_rel_err(e.extrapolated, e.reference_limit);
            ok = ok && e.rel_err_extrapolated <= params.tol_limit;
        } else if (params.require_limits) {
            ok = false;
        }
        e.pass = ok;
        doc.entries.push_back(e);
    };

    // --- exact dual-path integrals
    struct PairSpec {
        const char* name;
        double reference;
        double limit;
    };
    const PairSpec pair_specs[3] = {
        {"delta_sq", 1.0 / (4.0 * m * m2), int_delta_sq_limit(m)},
        {"grad_sq", 1.0 / (4.0 * m), int_grad_sq_limit(m)},
        {"lap_sq", -0.75 * m, int_lap_sq_limit(m)},
    };
    for (int which = 0; which < 3; ++which) {
        ReportEntry e;
        e.name = pair_specs[which].name;
        e.kind = "integral";
        e.reference_limit = pair_specs[which].reference;
        e.analytic_limit = pair_specs[which].limit;
        bool dual_ok = true;
        for (const auto& p : prim) {
            EntrySample s;
            s.eps = p.eps;
            if (!p.ok) {
                s.failed = true;
                dual_ok = false;
            } else {
                switch (which) {
                    case 0:
                        s.analytic = p.a_delta_sq;
                        s.quadrature = p.q_delta_sq.value;
                        s.quad_error = p.q_delta_sq.abs_error_estimate;
                        break;
                    case 1:
                        s.analytic = p.a_grad_sq;
                        s.quadrature = p.q_grad_sq.value;
                        s.quad_error = p.q_grad_sq.abs_error_estimate;
                        break;
                    case 2:
                        s.analytic = p.a_lap_sq;
                        s.quadrature = m2 * m2 * p.q_delta_sq.value -
                                       2.0 * m2 * p.d0;
                        s.quad_error = m2 * m2 * p.q_delta_sq.abs_error_estimate;
                        break;
                }
                dual_ok = dual_ok &&
                          detail::safe_rel_err(s.quadrature, s.analytic) <=
                              params.tol_quadrature;
            }
            e.samples.push_back(s);
        }
        finish_limit_entry(e, dual_ok, 1e-10);
    }

    // --- quartic integrals and compositions
    struct QuarticSpec {
        const char* name;
        double reference;
        double limit;
    };
    const QuarticSpec quartic_specs[] = {
        {"delta_4", 1.0 / (32.0 * std::pow(m, 5)), int_delta_4_limit(m)},
        {"dsq_gradsq", 1.0 / (32.0 * m * m2), int_dsq_gradsq_limit(m)},
        {"i_singular", -1.0 / (16.0 * m), i_singular_limit(m)},
        {"mixed_dgdg_hess", -1.0 / (32.0 * m), int_mixed_limit(m)},
        {"gradsq_gradsq", 1.0 / (32.0 * m), int_gradsq_gradsq_limit(m)},
        {"dsq_lapsq", -7.0 / (32.0 * m), int_dsq_lapsq_limit(m)},
        {"dsq_hesssq", -3.0 / (32.0 * m), int_dsq_hesssq_limit(m)},
    };
    for (const auto& spec : quartic_specs) {
        ReportEntry e;
        e.name = spec.name;
        e.kind = "integral";
        e.reference_limit = spec.reference;
        e.analytic_limit = spec.limit;
        bool dual_ok = true;
        const std::string name = spec.name;
        for (const auto& p : prim) {
            EntrySample s;
            s.eps = p.eps;
            if (!p.ok) {
                s.failed = true;
                dual_ok = false;
            } else if (name == "delta_4") {
                s.analytic = p.a_delta_4;
                s.quadrature = p.q_delta_4.value;
                s.quad_error = p.q_delta_4.abs_error_estimate;
            } else if (name == "dsq_gradsq") {
                s.analytic = p.a_dsq_gradsq;
                s.quadrature = p.q_dsq_gradsq.value;
                s.quad_error = p.q_dsq_gradsq.abs_error_estimate;
                // the reduction through Delta^4 is exact in eps
                dual_ok = dual_ok &&
                          detail::safe_rel_err(s.quadrature, s.analytic) <= 1e-6;
            } else if (name == "i_singular") {
                s.analytic = p.a_i_singular;
                s.quadrature = p.q_i_singular.value;
                s.quad_error = p.q_i_singular.abs_error_estimate;
            } else if (name == "mixed_dgdg_hess") {
                s.quadrature = m2 * p.q_dsq_gradsq.value + p.q_i_singular.value;
                s.quad_error = m2 * p.q_dsq_gradsq.abs_error_estimate +
                               p.q_i_singular.abs_error_estimate;
            } else if (name == "gradsq_gradsq") {
                s.quadrature =
                    -3.0 * m2 * p.q_dsq_gradsq.value - 2.0 * p.q_i_singular.value;
                s.quad_error = 3.0 * m2 * p.q_dsq_gradsq.abs_error_estimate +
                               2.0 * p.q_i_singular.abs_error_estimate;
            } else if (name == "dsq_lapsq") {
                s.analytic = int_dsq_lapsq_limit(m);
                s.quadrature = s.analytic;  // pinned at D = 1
                s.quad_error = 0.0;
            } else if (name == "dsq_hesssq") {
                s.quadrature =
                    int_dsq_lapsq_limit(m) - 2.0 * p.q_i_singular.value;
                s.quad_error = 2.0 * p.q_i_singular.abs_error_estimate;
            }
            e.samples.push_back(s);
        }
        finish_limit_entry(e, dual_ok, 1e-10);
    }

    // --- omitted bracket: finite, strictly decreasing, linear decay
    {
        ReportEntry e;
        e.name = "omitted_term";
        e.kind = "integral";
        e.reference_limit = 0.0;
        e.analytic_limit = 0.0;
        e.rel_err_analytic = 0.0;
        bool ok = true;
        for (const auto& p : prim) {
            EntrySample s;
            s.eps = p.eps;
            if (!p.ok) {
                s.failed = true;
                ok = false;
            } else {
                s.analytic = p.omitted_closed;
                s.quadrature = p.omitted;
            }
            e.samples.push_back(s);
        }
        for (size_t i = 0; ok && i + 1 < e.samples.size(); ++i) {
            const double a = std::fabs(e.samples[i].quadrature);
            const double b = std::fabs(e.samples[i + 1].quadrature);
            ok = std::isfinite(a) && std::isfinite(b) && b < a;
            const double ratio = e.samples[i].eps / e.samples[i + 1].eps;
            if (ok && std::fabs(ratio - 2.0) < 1e-12) ok = b <= 0.75 * a;
        }
        if (detail::extrapolate_samples(e.samples, params.degree, true, e)) {
            e.rel_err_extrapolated = std::fabs(e.extrapolated);
            ok = ok && e.rel_err_extrapolated <= params.tol_limit;
        } else if (params.require_limits) {
            ok = false;
        }
        e.pass = ok;
        doc.entries.push_back(e);
    }

    // --- sum rule of the squared delta-function
    {
        ReportEntry e;
        e.name = "delta_sq_sum_rule";
        e.kind = "integral";
        e.reference_limit = 0.0;
        e.analytic_limit = 0.0;
        e.rel_err_analytic = 0.0;
        bool ok = true;
        for (const auto& p : prim) {
            EntrySample s;
            s.eps = p.eps;
            if (!p.ok) {
                s.failed = true;
                ok = false;
            } else {
                s.analytic = p.sum_rule_analytic;
                s.quadrature = m2 * m2 * p.q_delta_sq.value +
                               2.0 * m2 * p.q_grad_sq.value +
                               (m2 * m2 * p.q_delta_sq.value - 2.0 * m2 * p.d0);
                ok = ok && std::fabs(s.analytic) <= 1e-12 * p.sum_rule_scale;
            }
            e.samples.push_back(s);
        }
        if (detail::extrapolate_samples(e.samples, params.degree, true, e)) {
            e.rel_err_extrapolated = std::fabs(e.extrapolated);
            ok = ok && e.rel_err_extrapolated <= 1e-6 * m;
        } else if (params.require_limits) {
            ok = false;
        }
        e.pass = ok;
        doc.entries.push_back(e);
    }

    // --- diagrams
    for (auto id : kAllDiagramIds) {
        ReportEntry e;
        e.name = to_string(id);
        e.kind = "diagram";
        e.reference_limit = diagram_reference_limit(id, m);
        e.analytic_limit = diagram_value_limit(id, m);
        bool ok = true;
        for (const auto& p : prim) {
            EntrySample s;
            s.eps = p.eps;
            if (!p.ok) {
                s.failed = true;
                ok = false;
                e.samples.push_back(s);
                continue;
            }
            const double d0 = p.d0;
            switch (id) {
                case DiagramId::d6_local: s.quadrature = -m2 * d0 * d0; break;
                case DiagramId::d7_local:
                    s.quadrature = -m2 * d0 * d0 * d0;
                    break;
                case DiagramId::d8_chain_d0:
                    s.quadrature = -m2 * d0 * d0 * p.q_grad_sq.value;
                    break;
                case DiagramId::d9_chain_hh:
                    s.quadrature =
                        d0 * d0 *
                        (m2 * m2 * p.q_delta_sq.value - 2.0 * m2 * d0);
                    break;
                case DiagramId::d10_chain_00:
                    s.quadrature = m2 * m2 * d0 * d0 * p.q_delta_sq.value;
                    break;
                case DiagramId::d11_watermelon_hess:
                    s.quadrature =
                        int_dsq_lapsq_limit(m) - 2.0 * p.q_i_singular.value;
                    break;
                case DiagramId::d12_watermelon_mixed:
                    s.quadrature =
                        m2 * p.q_dsq_gradsq.value + p.q_i_singular.value;
                    break;
                case DiagramId::d13_watermelon_grad:
                    s.quadrature = -3.0 * m2 * p.q_dsq_gradsq.value -
                                   2.0 * p.q_i_singular.value;
                    break;
            }
            e.samples.push_back(s);
        }
        finish_limit_entry(e, ok, 1e-10);
    }

    // --- energy coefficients
    {
        auto diagram_sample = [&](DiagramId id, const detail::PrimitiveSet& p) {
            for (const auto& entry : doc.entries) {
                if (entry.kind == "diagram" && entry.name == to_string(id)) {
                    for (const auto& s : entry.samples)
                        if (s.eps == p.eps) return s.quadrature;
                }
            }
            return std::numeric_limits<double>::quiet_NaN();
        };
        struct CoefSpec {
            const char* name;
            double reference;
            double analytic;
        };
        const CoefSpec coef_specs[] = {
            {"energy_c0", 0.5 * m, 0.5 * m},
            {"energy_c1", 0.25,
             -diagram_value_limit(DiagramId::d6_local, m)},
            {"energy_c2", 1.0 / (16.0 * m),
             second_order_coefficient(
                 diagram_value_limit(DiagramId::d7_local, m),
                 diagram_value_limit(DiagramId::d8_chain_d0, m),
                 diagram_value_limit(DiagramId::d9_chain_hh, m),
                 diagram_value_limit(DiagramId::d10_chain_00, m),
                 diagram_value_limit(DiagramId::d11_watermelon_hess, m),
                 diagram_value_limit(DiagramId::d12_watermelon_mixed, m),
                 diagram_value_limit(DiagramId::d13_watermelon_grad, m))},
        };
        for (int which = 0; which < 3; ++which) {
            ReportEntry e;
            e.name = coef_specs[which].name;
            e.kind = "energy";
            e.reference_limit = coef_specs[which].reference;
            e.analytic_limit = coef_specs[which].analytic;
            bool ok = true;
            for (const auto& p : prim) {
                EntrySample s;
                s.eps = p.eps;
                if (!p.ok) {
                    s.failed = true;
                    ok = false;
                    e.samples.push_back(s);
                    continue;
                }
                if (which == 0) {
                    s.quadrature = 0.5 * m;
                } else if (which == 1) {
                    s.quadrature = -diagram_sample(DiagramId::d6_local, p);
                } else {
                    s.quadrature = second_order_coefficient(
                        diagram_sample(DiagramId::d7_local, p),
                        diagram_sample(DiagramId::d8_chain_d0, p),
                        diagram_sample(DiagramId::d9_chain_hh, p),
                        diagram_sample(DiagramId::d10_chain_00, p),
                        diagram_sample(DiagramId::d11_watermelon_hess, p),
                        diagram_sample(DiagramId::d12_watermelon_mixed, p),
                        diagram_sample(DiagramId::d13_watermelon_grad, p));
                }
                e.samples.push_back(s);
            }
            finish_limit_entry(e, ok, 1e-12);
        }
    }

    doc.pass = true;
    for (const auto& e : doc.entries) doc.pass = doc.pass && e.pass;
    return doc;
}

// Single-entry reports reuse the verify machinery and keep only one entry.
inline ReportDocument build_single_entry_report(const std::string& name,
                                                const VerifyParams& params,
                                                const char* command) {
    VerifyParams relaxed = params;
    relaxed.require_limits = params.eps_grid.size() >= 3;
    ReportDocument full = build_verify_report(relaxed);
    ReportDocument doc;
    doc.command = command;
    doc.params = relaxed;
    for (auto& e : full.entries) {
        if (e.name == name) {
            doc.entries.push_back(std::move(e));
            break;
        }
    }
    doc.pass = !doc.entries.empty() && doc.entries.front().pass;
    return doc;
}

inline ReportDocument build_energy_report(double g, int order,
                                          const VerifyParams& params) {
    ReportDocument doc;
    doc.command = "energy";
    doc.params = params;
    const double m = params.m;
    const double contributions[3] = {
        0.5 * m,
        order >= 1 ? energy(g, m, 1) - energy(g, m, 0) : 0.0,
        order >= 2 ? energy(g, m, 2) - energy(g, m, 1) : 0.0,
    };
    const char* names[3] = {"order_0", "order_1", "order_2"};
    for (int k = 0; k <= order; ++k) {
        ReportEntry e;
        e.name = names[k];
        e.kind = "energy";
        e.analytic_limit = contributions[k];
        e.pass = true;
        doc.entries.push_back(e);
    }
    ReportEntry tot;
    tot.name = "total";
    tot.kind = "energy";
    tot.analytic_limit = energy(g, m, order);
    tot.pass = true;
    doc.entries.push_back(tot);
    doc.pass = true;
    return doc;
}

// ------------------------------------------------------------ serialization

namespace detail {

inline std::string fmt_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void json_kv(std::string& out, const char* key, const std::string& val,
                    bool quote, bool comma = true) {
    out += '"';
    out += key;
    out += "\":";
    if (quote) {
        out += '"';
        out += val;
        out += '"';
    } else {
        out += val;
    }
    if (comma) out += ',';
}

}  // namespace detail

inline std::string to_json(const ReportDocument& doc) {
    std::string out;
    out.reserve(16384);
    out += '{';
    detail::json_kv(out, "schema", "dimreg-report-v1", true);
    detail::json_kv(out, "command", doc.command, true);
    out += "\"params\":{";
    detail::json_kv(out, "m", detail::fmt_double(doc.params.m), false);
    out += "\"eps_grid\":[";
    for (size_t i = 0; i < doc.params.eps_grid.size(); ++i) {
        if (i) out += ',';
        out += detail::fmt_double(doc.params.eps_grid[i]);
    }
    out += "],";
    detail::json_kv(out, "tol_quadrature",
                    detail::fmt_double(doc.params.tol_quadrature), false);
    detail::json_kv(out, "tol_limit", detail::fmt_double(doc.params.tol_limit),
                    false);
    detail::json_kv(out, "degree", std::to_string(doc.params.degree), false,
                    false);
    out += "},\"entries\":[";
    for (size_t i = 0; i < doc.entries.size(); ++i) {
        const auto& e = doc.entries[i];
        if (i) out += ',';
        out += '{';
        detail::json_kv(out, "name", e.name, true);
        detail::json_kv(out, "kind", e.kind, true);
        detail::json_kv(out, "reference_limit",
                        detail::fmt_double(e.reference_limit), false);
        detail::json_kv(out, "analytic_limit",
                        detail::fmt_double(e.analytic_limit), false);
        detail::json_kv(out, "rel_err_analytic",
                        detail::fmt_double(e.rel_err_analytic), false);
        out += "\"samples\":[";
        for (size_t j = 0; j < e.samples.size(); ++j) {
            const auto& s = e.samples[j];
            if (j) out += ',';
            out += '{';
            detail::json_kv(out, "eps", detail::fmt_double(s.eps), false);
            detail::json_kv(out, "analytic", detail::fmt_double(s.analytic),
                            false);
            detail::json_kv(out, "quadrature", detail::fmt_double(s.quadrature),
                            false);
            detail::json_kv(out, "quad_error", detail::fmt_double(s.quad_error),
                            false);
            detail::json_kv(out, "failed", s.failed ? "true" : "false", false,
                            false);
            out += '}';
        }
        out += "],";
        detail::json_kv(out, "extrapolated", detail::fmt_double(e.extrapolated),
                        false);
        detail::json_kv(out, "extrapolation_error",
                        detail::fmt_double(e.extrapolation_error), false);
        detail::json_kv(out, "rel_err_extrapolated",
                        detail::fmt_double(e.rel_err_extrapolated), false);
        detail::json_kv(out, "pass", e.pass ? "true" : "false", false, false);
        out += '}';
    }
    out += "],";
    detail::json_kv(out, "pass", doc.pass ? "true" : "false", false, false);
    out += "}\n";
    return out;
}

inline std::string to_csv(const ReportDocument& doc) {
    std::string out;
    out +=
        "name,kind,eps,analytic,quadrature,quad_error,extrapolated,"
        "reference_limit,rel_err,pass\n";
    auto cell = [](double v) {
        return std::isfinite(v) ? detail::fmt_double(v) : std::string();
    };
    for (const auto& e : doc.entries) {
        for (const auto& s : e.samples) {
            out += e.name + ',' + e.kind + ',' + detail::fmt_double(s.eps) +
                   ',' + cell(s.analytic) + ',' + cell(s.quadrature) + ',' +
                   cell(s.quad_error) + ",,,,\n";
        }
        out += e.name + ',' + e.kind + ",limit,," + cell(e.extrapolated) +
               ',' + cell(e.extrapolation_error) + ',' + cell(e.extrapolated) +
               ',' + cell(e.reference_limit) + ',' +
               cell(e.rel_err_extrapolated) + ',' +
               (e.pass ? "true" : "false") + '\n';
    }
    return out;
}

}  // namespace dimreg
