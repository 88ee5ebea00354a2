#pragma once

#include "angspace/tolerances.hpp"
#include "angspace/vec2.hpp"
#include "angspace/weights.hpp"

namespace angspace {

/// Polar coordinates with respect to a basis {b1, b2}: rho = ||v||, alpha the
/// Thy angle to b1, negated when the b2-coordinate of v is negative.
struct PolarCoord {
    double rho = 0.0;
    double alpha = 0.0;  // (-pi, pi]
};

/// Solves thy_angle(x, y + t x) = alpha_target for t, alpha_target in (0, pi).
/// Expands the bracket [-2^k, 2^k] until it straddles the target (k <= 80,
/// otherwise NotBracketed), then bisects on the decreasing map t -> Theta(t).
/// Throws MonotonicityViolated if bisection observes Theta leaving the range
/// spanned by the bracket endpoints.
double theta_inverse(const Weight& w, const Vec2& x, const Vec2& y, double alpha_target,
                     const Tolerances& tol = default_tolerances());

PolarCoord polar_encode(const Weight& w, const Vec2& b1, const Vec2& b2, const Vec2& v,
                        const Tolerances& tol = default_tolerances());

/// Inverse of polar_encode. For alpha in (0, pi) the result is
/// rho * sign(b2 + t b1) with Theta(t) = alpha; negative alpha uses -b2.
Vec2 polar_decode(const Weight& w, const Vec2& b1, const Vec2& b2, const PolarCoord& p,
                  const Tolerances& tol = default_tolerances());

}  // namespace angspace
