#pragma once

#include <cmath>
#include <ostream>

namespace angspace {

/// Coordinates of a vector of R^2 in a fixed basis.
template <class T>
struct BasicVec2 {
    T x1{0};
    T x2{0};

    constexpr BasicVec2() = default;
    constexpr BasicVec2(T a, T b) : x1(a), x2(b) {}

    template <class U>
    constexpr explicit BasicVec2(const BasicVec2<U>& o)
        : x1(static_cast<T>(o.x1)), x2(static_cast<T>(o.x2)) {}

    constexpr BasicVec2 operator-() const { return {-x1, -x2}; }
    constexpr BasicVec2& operator+=(const BasicVec2& o) { x1 += o.x1; x2 += o.x2; return *this; }
    constexpr BasicVec2& operator-=(const BasicVec2& o) { x1 -= o.x1; x2 -= o.x2; return *this; }
    constexpr BasicVec2& operator*=(T s) { x1 *= s; x2 *= s; return *this; }

    friend constexpr BasicVec2 operator+(BasicVec2 a, const BasicVec2& b) { return a += b; }
    friend constexpr BasicVec2 operator-(BasicVec2 a, const BasicVec2& b) { return a -= b; }
    friend constexpr BasicVec2 operator*(T s, BasicVec2 v) { return v *= s; }
    friend constexpr BasicVec2 operator*(BasicVec2 v, T s) { return v *= s; }
    friend constexpr BasicVec2 operator/(const BasicVec2& v, T s) { return {v.x1 / s, v.x2 / s}; }
    friend constexpr bool operator==(const BasicVec2&, const BasicVec2&) = default;
};

using Vec2 = BasicVec2<double>;
using ExtVec2 = BasicVec2<long double>;

template <class T>
constexpr T dot(const BasicVec2<T>& a, const BasicVec2<T>& b) { return a.x1 * b.x1 + a.x2 * b.x2; }

/// z-component of the 3-D cross product; positive when b is counterclockwise of a.
template <class T>
constexpr T cross(const BasicVec2<T>& a, const BasicVec2<T>& b) { return a.x1 * b.x2 - a.x2 * b.x1; }

template <class T>
T euclid_norm(const BasicVec2<T>& v) { return std::hypot(v.x1, v.x2); }

inline bool is_finite(const Vec2& v) { return std::isfinite(v.x1) && std::isfinite(v.x2); }

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x1 << ", " << v.x2 << ')';
}

}  // namespace angspace
