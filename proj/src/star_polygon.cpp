#include "angspace/star_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "angspace/errors.hpp"

namespace angspace {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

StarPolygon::StarPolygon(std::span<const Vec2> vertices) : vertices_(vertices.begin(), vertices.end()) {
    if (vertices_.size() < 3) throw Error(ErrorCode::NotStarShaped, "sphere polygon needs at least 3 vertices");
    for (const auto& v : vertices_) {
        if (!is_finite(v)) throw Error(ErrorCode::InvalidArgument, "sphere polygon vertex is not finite");
        if (v.x1 == 0.0 && v.x2 == 0.0)
            throw Error(ErrorCode::NotStarShaped, "sphere polygon passes through the origin");
    }

    const std::size_t n = vertices_.size();
    double winding = 0.0;
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        const double turn = std::atan2(cross(a, b), dot(a, b));
        const int s = turn > 0.0 ? 1 : (turn < 0.0 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign))
            throw Error(ErrorCode::NotStarShaped,
                        "sphere polyline is not star-shaped about the origin (vertex " + std::to_string(i) + ")");
        sign = s;
        winding += turn;
    }
    if (std::abs(std::abs(winding) - two_pi) > 1e-9)
        throw Error(ErrorCode::NotStarShaped, "sphere polyline must wind exactly once around the origin");
    if (sign < 0) std::reverse(vertices_.begin(), vertices_.end());

    // Rotate so the vertex with the smallest atan2 comes first, then unwrap.
    auto first = std::min_element(vertices_.begin(), vertices_.end(), [](const Vec2& a, const Vec2& b) {
        return std::atan2(a.x2, a.x1) < std::atan2(b.x2, b.x1);
    });
    std::rotate(vertices_.begin(), first, vertices_.end());
    angles_.reserve(n);
    for (const auto& v : vertices_) {
        double a = std::atan2(v.x2, v.x1);
        if (!angles_.empty() && a < angles_.back()) a += two_pi;
        angles_.push_back(a);
    }
}

std::size_t StarPolygon::sector_of(long double angle) const {
    double a = static_cast<double>(angle);
    if (a < angles_.front()) a += two_pi;
    auto it = std::upper_bound(angles_.begin(), angles_.end(), a);
    // it points one past the sector start; sector i spans vertices i -> i+1.
    const auto idx = static_cast<std::size_t>(it - angles_.begin());
    return idx == 0 ? vertices_.size() - 1 : idx - 1;
}

long double StarPolygon::gauge(const ExtVec2& v) const {
    if (v.x1 == 0.0L && v.x2 == 0.0L) return 0.0L;
    const std::size_t n = vertices_.size();
    std::size_t i = sector_of(std::atan2(v.x2, v.x1));
    // Rounding in atan2 can land one sector off next to a vertex; both
    // neighbouring edge lines pass through that vertex, but prefer the sector
    // that actually contains v.
    for (int attempt = 0; attempt < 3; ++attempt) {
        const ExtVec2 a(vertices_[i]);
        const ExtVec2 b(vertices_[(i + 1) % n]);
        const long double ca = cross(a, v);
        const long double cb = cross(v, b);
        if (ca >= 0.0L && cb >= 0.0L) return (ca + cb) / cross(a, b);
        i = ca < 0.0L ? (i + n - 1) % n : (i + 1) % n;
    }
    const ExtVec2 a(vertices_[i]);
    const ExtVec2 b(vertices_[(i + 1) % n]);
    return (cross(a, v) + cross(v, b)) / cross(a, b);
}

double StarPolygon::gauge(const Vec2& v) const { return static_cast<double>(gauge(ExtVec2(v))); }

bool StarPolygon::is_convex(double slack) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % n];
        const Vec2& c = vertices_[(i + 2) % n];
        if (cross(b - a, c - b) < -slack) return false;
    }
    return true;
}

bool StarPolygon::is_centrally_symmetric(double tol) const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [&](const Vec2& v) { return std::abs(gauge(-v) - 1.0) <= tol; });
}

}  // namespace angspace
