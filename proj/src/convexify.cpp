#include "angspace/convexify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "angspace/errors.hpp"

namespace angspace {

namespace {

Vec2 direction(std::size_t k, std::size_t n) {
    if ((4 * k) % n == 0) {
        switch ((4 * k) / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(phi), std::sin(phi)};
}

bool lex_less(const Vec2& a, const Vec2& b) { return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2); }

template <class T>
T turn(const Vec2& o, const Vec2& a, const Vec2& b) {
    const BasicVec2<T> oo(o);
    return cross(BasicVec2<T>(a) - oo, BasicVec2<T>(b) - oo);
}

bool same_line(const std::vector<Vec2>& dirs) {
    return std::all_of(dirs.begin(), dirs.end(),
                       [&](const Vec2& d) { return std::abs(cross(d, dirs.front())) <= 1e-12; });
}

long double strip_gauge(const HullPolygon& h, const ExtVec2& v) {
    const Vec2& d = h.unbounded_dirs.front();
    const ExtVec2 nrm(-static_cast<long double>(d.x2), static_cast<long double>(d.x1));
    long double up = 0.0L, down = 0.0L;
    for (const auto& p : h.vertices) {
        const long double s = dot(nrm, ExtVec2(p));
        up = std::max(up, s);
        down = std::max(down, -s);
    }
    if (!(up > 0.0L && down > 0.0L)) throw Error(ErrorCode::DegenerateInput, "strip hull does not contain the origin");
    const long double s = dot(nrm, v);
    return std::max(s / up, -s / down);
}

}  // namespace

SphereSample sample_sphere(const Weight& w, std::size_t n, const Tolerances& tol) {
    if (n < 4) throw Error(ErrorCode::InvalidArgument, "sphere sampling needs n >= 4");
    SphereSample out;
    std::vector<Vec2> dirs(n);
    const std::size_t half = n % 2 == 0 ? n / 2 : n;
    for (std::size_t k = 0; k < n; ++k) dirs[k] = k < half ? direction(k, n) : -dirs[k - half];
    for (const auto& u : dirs) {
        if (in_zero_set(w, u, tol))
            out.unbounded_dirs.push_back(u);
        else
            out.points.push_back(sign(w, u, tol));
    }
    return out;
}

std::vector<Vec2> sphere_polyline(const Weight& w, std::size_t n, const Tolerances& tol) {
    if (const StarPolygon* poly = w.sphere_polygon()) return poly->vertices();
    return sample_sphere(w, n, tol).points;
}

HullPolygon convex_hull(std::span<const Vec2> points) {
    std::vector<Vec2> pts(points.begin(), points.end());
    for (const auto& p : pts)
        if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "hull input point is not finite");
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw Error(ErrorCode::DegenerateInput, "convex hull needs three distinct points");

    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && turn<long double>(hull[k - 2], hull[k - 1], p) <= 0.0L) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && turn<long double>(hull[k - 2], hull[k - 1], pts[i]) <= 0.0L) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw Error(ErrorCode::DegenerateInput, "convex hull input is collinear");

    HullPolygon h;
    h.vertices = std::move(hull);
    const std::size_t m = h.vertices.size();
    h.origin_interior = true;
    for (std::size_t i = 0; i < m; ++i)
        if (!(cross(ExtVec2(h.vertices[i]), ExtVec2(h.vertices[(i + 1) % m])) > 0.0L)) h.origin_interior = false;
    return h;
}

HullPolygon weight_hull(const Weight& w, std::size_t n, const Tolerances& tol) {
    if (const StarPolygon* poly = w.sphere_polygon()) return convex_hull(poly->vertices());
    SphereSample s = sample_sphere(w, n, tol);
    HullPolygon h = convex_hull(s.points);
    h.unbounded_dirs = std::move(s.unbounded_dirs);
    return h;
}

long double minkowski_functional(const HullPolygon& h, const ExtVec2& v) {
    if (v.x1 == 0.0L && v.x2 == 0.0L) return 0.0L;
    if (!h.bounded()) return same_line(h.unbounded_dirs) ? strip_gauge(h, v) : 0.0L;

    const std::size_t m = h.vertices.size();
    long double g = 0.0L;
    for (std::size_t i = 0; i < m; ++i) {
        const ExtVec2 a(h.vertices[i]);
        const ExtVec2 b(h.vertices[(i + 1) % m]);
        const ExtVec2 e = b - a;
        const ExtVec2 outward(e.x2, -e.x1);
        const long double support = cross(a, b);
        const long double s = dot(outward, v);
        if (support < 0.0L) throw Error(ErrorCode::InvalidArgument, "the origin lies outside the hull");
        if (support == 0.0L) {
            if (s > 0.0L) throw Error(ErrorCode::UnboundedDirection, "the origin lies on the hull boundary");
            continue;
        }
        g = std::max(g, s / support);
    }
    return g;
}

double minkowski_functional(const HullPolygon& h, const Vec2& v) {
    return static_cast<double>(minkowski_functional(h, ExtVec2(v)));
}

Weight conv_weight(const Weight& w, std::size_t n, const Tolerances& tol) {
    HullPolygon h = weight_hull(w, n, tol);
    const std::string name = "conv(" + w.name() + ")";
    if (is_normable(h)) return Weight::custom_sphere(h.vertices, name);
    auto shared = std::make_shared<const HullPolygon>(std::move(h));
    return Weight::custom_fn([shared](const Vec2& v) { return minkowski_functional(*shared, v); },
                             WeightClaims{false, true, true}, name);
}

bool is_normable(const HullPolygon& h) { return h.bounded() && h.origin_interior; }

bool is_normable(const Weight& w, std::size_t n, const Tolerances& tol) { return is_normable(weight_hull(w, n, tol)); }

AngleResult generalized_thy_angle(const HullPolygon& h, const Vec2& x, const Vec2& y, const Tolerances& tol) {
    if (!is_normable(h)) throw Error(ErrorCode::NotNormable, "conv(B) is not a norm ball");
    if ((x.x1 == 0.0 && x.x2 == 0.0) || (y.x1 == 0.0 && y.x2 == 0.0))
        throw Error(ErrorCode::ZeroVector, "generalized angle with the zero vector");
    ExtVec2 a(x);
    ExtVec2 b(y);
    if (b.x1 < a.x1 || (b.x1 == a.x1 && b.x2 < a.x2)) std::swap(a, b);
    const long double ga = minkowski_functional(h, a);
    const long double gb = minkowski_functional(h, b);
    const ExtVec2 ua = a / ga;
    const ExtVec2 ub = b / gb;
    const long double s = minkowski_functional(h, ua + ub);
    const long double d = minkowski_functional(h, ua - ub);
    return angle_from_ratio(0.25L * (s - d) * (s + d), static_cast<double>(ga * gb), tol);
}

AngleResult generalized_thy_angle(const Weight& w, const Vec2& x, const Vec2& y, std::size_t n,
                                  const Tolerances& tol) {
    return generalized_thy_angle(weight_hull(w, n, tol), x, y, tol);
}

}  // namespace angspace
