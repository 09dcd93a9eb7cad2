#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "latgame/errors.hpp"

namespace latgame {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 500;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // achieved error estimate
    int subdivisions = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod nodes/weights and the embedded 7-point Gauss weights.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(center);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGK15Nodes[i];
        fv[i] = f(center - dx);
        fv[14 - i] = f(center + dx);
    }

    double resk = kGK15WeightsK[7] * fv[7];
    double resg = kGK15WeightsG[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kGK15WeightsK[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += kGK15WeightsG[i / 2] * (fv[i] + fv[14 - i]);
    }
    const double reskh = resk * 0.5;
    double resasc = kGK15WeightsK[7] * std::fabs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kGK15WeightsK[i] *
                  (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));
    resasc *= std::fabs(half);

    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, resk * half, err};
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Subdivides the
/// worst interval until the summed error estimate meets the tolerance.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    QuadResult res;
    if (!(a < b)) {
        res.converged = true;
        return res;
    }

    std::priority_queue<detail::Segment> segs;
    segs.push(detail::gk15(f, a, b));
    double total = segs.top().value;
    double total_err = segs.top().error;

    int splits = 0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)) &&
           splits < cfg.max_subdivisions) {
        detail::Segment worst = segs.top();
        segs.pop();
        total -= worst.value;
        total_err -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        detail::Segment left = detail::gk15(f, worst.a, mid);
        detail::Segment right = detail::gk15(f, mid, worst.b);
        total += left.value + right.value;
        total_err += left.error + right.error;
        segs.push(left);
        segs.push(right);
        ++splits;
    }

    res.value = total;
    res.error = total_err;
    res.subdivisions = splits;
    res.converged =
        total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total));
    return res;
}

/// integrate(), but a failure to converge is an error.
template <class F>
double integrate_or_throw(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    QuadResult r = integrate(std::forward<F>(f), a, b, cfg);
    if (!r.converged)
        throw NumericError("quadrature did not converge (achieved error " +
                               std::to_string(r.error) + ")",
                           r.error);
    return r.value;
}

} // namespace latgame
