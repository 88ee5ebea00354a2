#pragma once
// Reference computations written from the definitions, sharing no code with
// the library. Plain doubles and std::array only.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using P = std::array<double, 2>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double inf = std::numeric_limits<double>::infinity();

inline double lp(double p, P v) {
    if (std::isinf(p)) return std::max(std::fabs(v[0]), std::fabs(v[1]));
    return std::pow(std::pow(std::fabs(v[0]), p) + std::pow(std::fabs(v[1]), p), 1.0 / p);
}

inline double cross(P a, P b) { return a[0] * b[1] - a[1] * b[0]; }
inline double dot(P a, P b) { return a[0] * b[0] + a[1] * b[1]; }
inline double len(P a) { return std::sqrt(dot(a, a)); }

inline std::vector<P> hexagon(double r) { return {P{0, r}, P{1, 1}, P{1, -1}, P{0, -r}, P{-1, -1}, P{-1, 1}}; }

/// Gauge of a closed polygon around the origin: solve v s = a + u (b - a) on
/// every edge and keep the crossing with s > 0, u in [0, 1].
inline double ray_gauge(const std::vector<P>& poly, P v) {
    if (v[0] == 0 && v[1] == 0) return 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P a = poly[i], b = poly[(i + 1) % poly.size()];
        const P e{b[0] - a[0], b[1] - a[1]};
        // v s - e u = a
        const double det = -v[0] * e[1] + v[1] * e[0];
        if (det == 0) continue;
        const double s = (-a[0] * e[1] + a[1] * e[0]) / det;
        const double u = (v[0] * a[1] - v[1] * a[0]) / det;
        if (s > 0 && u >= -1e-12 && u <= 1 + 1e-12) best = std::min(best, 1.0 / s);
    }
    return best;
}

/// 1/4 |x| |y| (|x/|x| + y/|y||^2 - |x/|x| - y/|y||^2) for an arbitrary norm.
inline double spade(const std::function<double(P)>& norm, P x, P y) {
    const double nx = norm(x), ny = norm(y);
    if (nx == 0 || ny == 0) return 0;
    const P xs{x[0] / nx, x[1] / nx}, ys{y[0] / ny, y[1] / ny};
    const double a = norm({xs[0] + ys[0], xs[1] + ys[1]});
    const double b = norm({xs[0] - ys[0], xs[1] - ys[1]});
    return 0.25 * nx * ny * (a * a - b * b);
}

inline double dot_angle(P x, P y) {
    const double c = dot(x, y) / (len(x) * len(y));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

/// x-intercept of the line through p and q.
inline double x_intercept(P p, P q) { return p[0] - p[1] * (q[0] - p[0]) / (q[1] - p[1]); }

/// Convex polygon given counterclockwise; boundary counts as inside.
inline bool in_convex(const std::vector<P>& poly, P q, double slack = 1e-12) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P a = poly[i], b = poly[(i + 1) % poly.size()];
        if (cross({b[0] - a[0], b[1] - a[1]}, {q[0] - a[0], q[1] - a[1]}) < -slack) return false;
    }
    return true;
}

/// Random vector with uniform direction and length in [lo, hi].
inline P random_vec(std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
    std::uniform_real_distribution<double> ang(0.0, 2 * pi), rad(lo, hi);
    const double a = ang(rng), r = rad(rng);
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace oracle
