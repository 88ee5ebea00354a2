#pragma once

#include <optional>

#include "angspace/tolerances.hpp"
#include "angspace/vec2.hpp"
#include "angspace/weights.hpp"

namespace angspace {

/// Outcome of an angle evaluation: either an angle in [0, pi] or, when the
/// normalized product leaves [-1, 1] by more than the CSB slack, a report of
/// the offending product and its Cauchy-Schwarz bound.
struct AngleResult {
    double product = 0.0;  // <x|y> of the underlying product
    double bound = 0.0;    // ||x|| * ||y||
    double ratio = 0.0;    // product / bound, unclamped
    std::optional<double> value;

    bool csb_ok() const { return value.has_value(); }

    /// The angle; throws InternalInconsistency on a CSB violation.
    double radians() const;
};

/// Builds an AngleResult from a normalized product. Ratios within the CSB
/// slack of [-1, 1] are clamped before arccos.
AngleResult angle_from_ratio(long double ratio, double bound, const Tolerances& tol = default_tolerances());

/// <x|y>_spade = 1/4 ||x|| ||y|| (||x^ + y^||^2 - ||x^ - y^||^2), x^ = sign(x);
/// zero when x or y is in the zero-set. Symmetric bit for bit.
double spade_product(const Weight& w, const Vec2& x, const Vec2& y, const Tolerances& tol = default_tolerances());

/// arccos(<x|y>_spade / (||x|| ||y||)). Throws ZeroSetVector if x or y lies in
/// the zero-set; a CSB violation is returned, not thrown.
AngleResult thy_angle(const Weight& w, const Vec2& x, const Vec2& y, const Tolerances& tol = default_tolerances());
AngleResult thy_angle_ext(const Weight& w, const ExtVec2& x, const ExtVec2& y,
                          const Tolerances& tol = default_tolerances());

/// Angle of the standard dot product, computed as atan2(|x cross y|, x . y).
/// Throws ZeroVector.
double euclid_angle(const Vec2& x, const Vec2& y);

/// h+(t) = ||sign(x) + sign(y + t x)||.
double h_plus(const Weight& w, const Vec2& x, const Vec2& y, double t, const Tolerances& tol = default_tolerances());
/// h-(t) = ||sign(x) - sign(y + t x)||.
double h_minus(const Weight& w, const Vec2& x, const Vec2& y, double t, const Tolerances& tol = default_tolerances());

/// Theta(t) = thy_angle(x, y + t x), evaluated without rounding y + t x to double.
AngleResult theta(const Weight& w, const Vec2& x, const Vec2& y, double t, const Tolerances& tol = default_tolerances());

}  // namespace angspace
