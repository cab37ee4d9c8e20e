#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "fractel/errors.hpp"

namespace fractel {

/// Tolerances and budgets for the adaptive panel quadratures.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_panels = 4000;
    /// Multiplier applied to analytic tail-cutoff estimates (larger = more
    /// conservative truncation).
    double tail_safety = 10.0;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw ConfigError("QuadratureConfig: tolerances must be positive");
        if (max_panels < 1)
            throw ConfigError("QuadratureConfig: max_panels must be >= 1");
        if (!(tail_safety >= 1.0))
            throw ConfigError("QuadratureConfig: tail_safety must be >= 1");
    }
};

namespace quad {

// Gauss-Kronrod 7-15 node/weight set on [-1, 1] (QUADPACK values).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
inline double norm_of(const T& v) {
    if constexpr (std::is_same_v<T, std::complex<double>>)
        return std::abs(v);
    else
        return std::fabs(static_cast<double>(v));
}

template <class T>
struct PanelEstimate {
    T integral{};
    double error = 0.0;
    double resabs = 0.0;
};

/// One Gauss-Kronrod 7-15 evaluation on [a, b] with the QUADPACK error
/// heuristic.
template <class F>
auto gk15(F&& f, double a, double b) -> PanelEstimate<decltype(f(a))> {
    using T = decltype(f(a));
    const double hl = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    T fc = f(mid);
    T result_k = kWgk[7] * fc;
    T result_g = kWg[3] * fc;
    double resabs = kWgk[7] * norm_of(fc);

    T fv[15];
    fv[14] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = hl * kXgk[i];
        T f1 = f(mid - dx);
        T f2 = f(mid + dx);
        fv[2 * i] = f1;
        fv[2 * i + 1] = f2;
        result_k += kWgk[i] * (f1 + f2);
        if (i % 2 == 1)  // nodes 1,3,5 are the Gauss-7 nodes
            result_g += kWg[i / 2] * (f1 + f2);
        resabs += kWgk[i] * (norm_of(f1) + norm_of(f2));
    }

    T mean = result_k * 0.5;
    double resasc = kWgk[7] * norm_of(fv[14] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (norm_of(fv[2 * i] - mean) + norm_of(fv[2 * i + 1] - mean));

    PanelEstimate<T> out;
    out.integral = result_k * hl;
    out.resabs = resabs * std::fabs(hl);
    resasc *= std::fabs(hl);
    double err = norm_of(result_k - result_g) * std::fabs(hl);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    out.error = err;
    return out;
}

/// Adaptive bisection quadrature over [a, b].  `breakpoints` seeds the
/// initial subdivision (values outside (a,b) are ignored).
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureConfig& q,
               std::vector<double> breakpoints = {}) -> decltype(f(a)) {
    using T = decltype(f(a));
    if (a == b) return T{};
    if (!(a < b)) throw DomainError("integrate: requires a <= b");

    struct Seg {
        double a, b;
        PanelEstimate<T> est;
    };

    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    std::vector<Seg> segs;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        double lo = breakpoints[i], hi = breakpoints[i + 1];
        if (hi <= a || lo >= b) continue;
        lo = std::max(lo, a);
        hi = std::min(hi, b);
        if (hi > lo) segs.push_back({lo, hi, gk15(f, lo, hi)});
    }

    for (;;) {
        T total{};
        double err = 0.0;
        for (const auto& s : segs) {
            total += s.est.integral;
            err += s.est.error;
        }
        if (!std::isfinite(norm_of(total)))
            throw QuadratureFailure("integrate: non-finite integrand encountered");
        const double tol = std::max(q.abs_tol, q.rel_tol * norm_of(total));
        if (err <= tol) return total;
        if (static_cast<int>(segs.size()) >= q.max_panels)
            throw QuadratureFailure("integrate: panel budget exhausted (error " +
                                    std::to_string(err) + " > tol " + std::to_string(tol) + ")");

        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].est.error > segs[worst].est.error) worst = i;
        Seg s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            throw QuadratureFailure("integrate: panel collapsed below machine resolution");
        segs[worst] = {s.a, mid, gk15(f, s.a, mid)};
        segs.push_back({mid, s.b, gk15(f, mid, s.b)});
    }
}

/// Breakpoints geometrically graded toward `end` (one of the two interval
/// endpoints), for integrands with an integrable endpoint singularity or a
/// boundary layer there.  `min_frac` bounds the smallest panel relative to
/// the interval length.
inline std::vector<double> graded_breakpoints(double a, double b, double end,
                                              double min_frac = 1e-12,
                                              double ratio = 0.5) {
    std::vector<double> pts;
    const double len = b - a;
    double frac = 1.0;
    while (frac > min_frac) {
        frac *= ratio;
        pts.push_back(end == b ? b - frac * len : a + frac * len);
    }
    return pts;
}

/// Solves bound(t) <= target for increasing t (bound must eventually be
/// decreasing); returns a cutoff point.  Used for analytic tail truncation.
template <class Bound>
double tail_cutoff(Bound&& log_bound, double t0, double log_target) {
    double t = std::max(t0, 1e-8);
    double step = std::max(1.0, 0.5 * t);
    int guard = 0;
    while (log_bound(t) > log_target) {
        t += step;
        step *= 1.6;
        if (++guard > 200) throw QuadratureFailure("tail_cutoff: bound never met");
    }
    // bisect back toward the smallest satisfying point
    double lo = std::max(t0, t - step / 1.6), hi = t;
    for (int i = 0; i < 40; ++i) {
        double mid = 0.5 * (lo + hi);
        (log_bound(mid) > log_target ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace quad
}  // namespace fractel
