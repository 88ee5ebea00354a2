#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "angspace/star_polygon.hpp"
#include "angspace/tolerances.hpp"
#include "angspace/vec2.hpp"

namespace angspace {

enum class WeightKind { Holder, Polygon, AxisSeminorm, Hyperbola, CustomSphere, CustomFn };

/// What the constructor of a weight asserts about it. Metadata only: nothing
/// in the library trusts these flags without checking.
struct WeightClaims {
    bool is_norm = false;
    bool is_seminorm = false;
    bool is_hw = true;
};

/// An absolutely homogeneous, nonnegative functional on R^2 ("homogeneous
/// weight"). Immutable; copies share the underlying sphere polygon.
class Weight {
public:
    using Evaluator = std::function<double(const Vec2&)>;

    /// (|x1|^p + |x2|^p)^(1/p); p = +inf gives the max-norm.
    static Weight holder(double p);

    /// Unit sphere is the hexagon through (0,r),(1,1),(1,-1),(0,-r),(-1,-1),(-1,1).
    static Weight polygon(double r);

    /// The seminorm |x1|; zero-set is the x2 axis.
    static Weight axis_seminorm();

    /// sqrt(|x1 x2|); unit sphere is |x1|*|x2| = 1, zero-set is both axes.
    static Weight hyperbola();

    /// Weight whose unit sphere is the given closed polyline. The polyline must
    /// be star-shaped about the origin and centrally symmetric.
    static Weight custom_sphere(std::span<const Vec2> polyline, std::string name = "sphere");

    /// Arbitrary user functional. It is trusted to be homogeneous; use
    /// validate_homogeneity() to probe that.
    static Weight custom_fn(Evaluator fn, WeightClaims claims, std::string name);

    double eval(const Vec2& v) const;
    long double eval_ext(const ExtVec2& v) const;

    WeightKind kind() const { return kind_; }
    double parameter() const { return parameter_; }
    const WeightClaims& claims() const { return claims_; }

    /// Spec-string style name, e.g. "lp:1", "polygon:0.5".
    const std::string& name() const { return name_; }

    /// The exact sphere polygon for Polygon and CustomSphere weights.
    const StarPolygon* sphere_polygon() const { return sphere_.get(); }

private:
    Weight() = default;

    WeightKind kind_ = WeightKind::Holder;
    double parameter_ = 0.0;
    WeightClaims claims_;
    std::string name_;
    std::shared_ptr<const StarPolygon> sphere_;
    std::shared_ptr<const Evaluator> fn_;
};

bool in_zero_set(const Weight& w, const Vec2& v, const Tolerances& tol = default_tolerances());

/// v / ||v||, the projection of v onto the unit sphere. Throws ZeroSetVector.
Vec2 sign(const Weight& w, const Vec2& v, const Tolerances& tol = default_tolerances());
ExtVec2 sign_ext(const Weight& w, const ExtVec2& v, const Tolerances& tol = default_tolerances());

/// A sampled pair (v, r) where |eval(r v) - |r| eval(v)| exceeded rel * eval(v).
struct HomogeneityViolation {
    Vec2 v;
    double r;
    double lhs;
    double rhs;
};

std::optional<HomogeneityViolation> validate_homogeneity(const Weight& w, std::uint64_t seed, std::size_t n,
                                                         const Tolerances& tol = default_tolerances());

/// A sampled pair violating eval(x+y) <= eval(x) + eval(y) + slack.
struct TriangleViolation {
    Vec2 x;
    Vec2 y;
    double lhs;
    double rhs;
};

/// Probes the axis pair (1,0),(0,1) first, then n random pairs.
std::optional<TriangleViolation> find_triangle_violation(const Weight& w, std::uint64_t seed, std::size_t n,
                                                         double slack = 1e-12);

}  // namespace angspace
