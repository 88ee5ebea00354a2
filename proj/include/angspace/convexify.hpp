#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "angspace/angle.hpp"
#include "angspace/tolerances.hpp"
#include "angspace/vec2.hpp"
#include "angspace/weights.hpp"

namespace angspace {

inline constexpr std::size_t default_sphere_samples = 1024;

/// Unit-sphere samples along theta_k = 2 pi k / n. Directions in the zero-set
/// have no sphere point and are listed in `unbounded_dirs` instead.
struct SphereSample {
    std::vector<Vec2> points;
    std::vector<Vec2> unbounded_dirs;  // Euclidean unit vectors
};

/// Requires n >= 4. The second half of the directions mirrors the first when
/// n is even, and multiples of pi/2 are taken as exact axis vectors.
SphereSample sample_sphere(const Weight& w, std::size_t n, const Tolerances& tol = default_tolerances());

/// The exact vertex list for polygonal weights; sample_sphere(w, n).points otherwise.
std::vector<Vec2> sphere_polyline(const Weight& w, std::size_t n, const Tolerances& tol = default_tolerances());

/// Convex polygon, counterclockwise, no repeated or collinear vertices. A
/// non-empty `unbounded_dirs` means the set also contains those rays, so the
/// hull is a strip (one line of directions) or the whole plane.
struct HullPolygon {
    std::vector<Vec2> vertices;
    bool origin_interior = false;
    std::vector<Vec2> unbounded_dirs;

    bool bounded() const { return unbounded_dirs.empty(); }
};

/// Andrew's monotone chain. Throws DegenerateInput for fewer than three
/// distinct or all-collinear points.
HullPolygon convex_hull(std::span<const Vec2> points);

/// conv(B) of a weight: exact for polygonal weights, sampled with n
/// directions otherwise. Zero-set directions become unbounded rays.
HullPolygon weight_hull(const Weight& w, std::size_t n = default_sphere_samples,
                        const Tolerances& tol = default_tolerances());

/// inf{r > 0 : v / r in h}. Zero along the rays of an unbounded hull. Throws
/// UnboundedDirection when the origin sits on the boundary of h and v points
/// out of it, and InvalidArgument when the origin lies outside h.
double minkowski_functional(const HullPolygon& h, const Vec2& v);
long double minkowski_functional(const HullPolygon& h, const ExtVec2& v);

/// The gauge of conv(B) as a weight: a CustomSphere for bounded hulls with
/// the origin inside, a CustomFn seminorm otherwise.
Weight conv_weight(const Weight& w, std::size_t n = default_sphere_samples,
                   const Tolerances& tol = default_tolerances());

bool is_normable(const HullPolygon& h);
bool is_normable(const Weight& w, std::size_t n = default_sphere_samples, const Tolerances& tol = default_tolerances());

/// Thy angle computed through the gauge g of conv(B):
/// arccos(1/4 [g(x/gx + y/gy)^2 - g(x/gx - y/gy)^2]). Throws NotNormable and
/// ZeroVector.
AngleResult generalized_thy_angle(const HullPolygon& h, const Vec2& x, const Vec2& y,
                                  const Tolerances& tol = default_tolerances());
AngleResult generalized_thy_angle(const Weight& w, const Vec2& x, const Vec2& y,
                                  std::size_t n = default_sphere_samples, const Tolerances& tol = default_tolerances());

}  // namespace angspace
