#pragma once

#include <span>
#include <vector>

#include "angspace/vec2.hpp"

namespace angspace {

/// A closed polygon that every ray from the origin crosses exactly once,
/// stored counterclockwise. Its gauge (the homogeneous functional whose unit
/// sphere is the polygon) is evaluated by exact ray/edge intersection.
class StarPolygon {
public:
    /// Accepts vertices in either orientation. Throws NotStarShaped unless
    /// consecutive vertices turn strictly one way around the origin and wind
    /// exactly once.
    explicit StarPolygon(std::span<const Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    double gauge(const Vec2& v) const;
    long double gauge(const ExtVec2& v) const;

    /// Every consecutive turn is a left turn (within `slack`), i.e. the
    /// enclosed region is convex.
    bool is_convex(double slack = 0.0) const;

    /// Each vertex negated also lies on the polygon (within `tol`).
    bool is_centrally_symmetric(double tol) const;

private:
    std::size_t sector_of(long double angle) const;

    std::vector<Vec2> vertices_;
    std::vector<double> angles_;  // atan2 of each vertex, unwrapped to be increasing
};

}  // namespace angspace
