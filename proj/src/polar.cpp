#include "angspace/polar.hpp"

#include <cmath>
#include <numbers>

#include "angspace/angle.hpp"
#include "angspace/errors.hpp"

namespace angspace {

namespace {

constexpr int max_bracket_exponent = 80;
constexpr int max_bisection_steps = 200;
constexpr double bracket_rel_width = 1e-14;

double theta_value(const Weight& w, const Vec2& x, const Vec2& y, double t, const Tolerances& tol) {
    const AngleResult r = theta(w, x, y, t, tol);
    if (!r.csb_ok())
        throw Error(ErrorCode::InvalidArgument, "weight violates the CSB inequality on this span; not a norm");
    return *r.value;
}

}  // namespace

double theta_inverse(const Weight& w, const Vec2& x, const Vec2& y, double alpha_target, const Tolerances& tol) {
    if (!(alpha_target > 0.0 && alpha_target < std::numbers::pi))
        throw Error(ErrorCode::InvalidArgument, "target angle must lie strictly inside (0, pi)");
    if (cross(x, y) == 0.0) throw Error(ErrorCode::InvalidArgument, "x and y must be linearly independent");

    double lo = 0.0, hi = 0.0, th_lo = 0.0, th_hi = 0.0;
    bool bracketed = false;
    for (int k = 0; k <= max_bracket_exponent && !bracketed; ++k) {
        lo = -std::ldexp(1.0, k);
        hi = std::ldexp(1.0, k);
        th_lo = theta_value(w, x, y, lo, tol);
        th_hi = theta_value(w, x, y, hi, tol);
        bracketed = th_lo >= alpha_target && alpha_target >= th_hi;
    }
    if (!bracketed)
        throw Error(ErrorCode::NotBracketed, "Theta does not straddle the target on [-2^80, 2^80]");

    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < max_bisection_steps; ++i) {
        mid = lo + 0.5 * (hi - lo);
        if (hi - lo < bracket_rel_width * std::max(1.0, std::abs(mid))) break;
        const double th_mid = theta_value(w, x, y, mid, tol);
        if (th_mid > th_lo + tol.strict || th_mid < th_hi - tol.strict)
            throw Error(ErrorCode::MonotonicityViolated, "Theta left its bracket during bisection at t = " +
                                                             std::to_string(mid));
        if (th_mid > alpha_target) {
            lo = mid;
            th_lo = th_mid;
        } else {
            hi = mid;
            th_hi = th_mid;
        }
    }

    const double reached = theta_value(w, x, y, mid, tol);
    if (std::abs(reached - alpha_target) > tol.angle)
        throw Error(ErrorCode::NotBracketed, "Theta jumps over the target angle (reached " + std::to_string(reached) +
                                                 "); the weight is not a norm on this span");
    return mid;
}

PolarCoord polar_encode(const Weight& w, const Vec2& b1, const Vec2& b2, const Vec2& v, const Tolerances& tol) {
    const double det = cross(b1, b2);
    if (det == 0.0) throw Error(ErrorCode::InvalidArgument, "basis vectors are linearly dependent");
    if (v.x1 == 0.0 && v.x2 == 0.0) throw Error(ErrorCode::ZeroVector, "polar coordinates of the zero vector");

    const double r1 = cross(v, b2) / det;
    const double r2 = cross(b1, v) / det;

    PolarCoord p;
    p.rho = w.eval(v);
    if (r2 == 0.0) {
        p.alpha = r1 > 0.0 ? 0.0 : std::numbers::pi;
        return p;
    }
    const AngleResult a = thy_angle(w, v, b1, tol);
    if (!a.csb_ok()) throw Error(ErrorCode::InvalidArgument, "weight violates the CSB inequality; not a norm");
    p.alpha = r2 > 0.0 ? *a.value : -*a.value;
    return p;
}

Vec2 polar_decode(const Weight& w, const Vec2& b1, const Vec2& b2, const PolarCoord& p, const Tolerances& tol) {
    constexpr double pi = std::numbers::pi;
    if (!(p.rho > 0.0)) throw Error(ErrorCode::InvalidArgument, "rho must be positive");
    if (!(p.alpha >= -pi && p.alpha <= pi)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (-pi, pi]");
    if (cross(b1, b2) == 0.0) throw Error(ErrorCode::InvalidArgument, "basis vectors are linearly dependent");

    if (p.alpha == 0.0) return Vec2(static_cast<long double>(p.rho) * sign_ext(w, ExtVec2(b1), tol));
    if (p.alpha == pi || p.alpha == -pi) return Vec2(static_cast<long double>(-p.rho) * sign_ext(w, ExtVec2(b1), tol));

    const Vec2 side = p.alpha > 0.0 ? b2 : -b2;
    const double t = theta_inverse(w, b1, side, std::abs(p.alpha), tol);
    const ExtVec2 dir = ExtVec2(side) + static_cast<long double>(t) * ExtVec2(b1);
    return Vec2(static_cast<long double>(p.rho) * sign_ext(w, dir, tol));
}

}  // namespace angspace
