#include "angspace/angle.hpp"

#include <algorithm>
#include <cmath>

#include "angspace/errors.hpp"

namespace angspace {

namespace {

bool lex_less(const ExtVec2& a, const ExtVec2& b) { return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2); }

/// 1/4 (||a + b||^2 - ||a - b||^2) for sphere points a, b. The operands are put
/// in a canonical order so the result does not depend on argument order.
long double unit_product(const Weight& w, ExtVec2 a, ExtVec2 b) {
    if (lex_less(b, a)) std::swap(a, b);
    if (w.kind() == WeightKind::Hyperbola) {
        // |P| - |M| with P = (a1+b1)(a2+b2), M = (a1-b1)(a2-b2), using
        // P - M = 2(a1 b2 + a2 b1) and P + M = 2(a1 a2 + b1 b2).
        const long double p = (a.x1 + b.x1) * (a.x2 + b.x2);
        const long double m = (a.x1 - b.x1) * (a.x2 - b.x2);
        const long double diff = 2.0L * (a.x1 * b.x2 + a.x2 * b.x1);
        const long double sum = 2.0L * (a.x1 * a.x2 + b.x1 * b.x2);
        if ((p >= 0.0L) == (m >= 0.0L)) return 0.25L * (p >= 0.0L ? diff : -diff);
        return 0.25L * (p >= 0.0L ? sum : -sum);
    }
    const long double s = w.eval_ext(a + b);
    const long double d = w.eval_ext(a - b);
    return 0.25L * (s - d) * (s + d);
}

ExtVec2 shifted(const Vec2& x, const Vec2& y, double t) {
    const ExtVec2 xe(x);
    const ExtVec2 ye(y);
    return ye + static_cast<long double>(t) * xe;
}

}  // namespace

double AngleResult::radians() const {
    if (!value) throw Error(ErrorCode::InternalInconsistency, "angle undefined: CSB inequality violated");
    return *value;
}

AngleResult angle_from_ratio(long double ratio, double bound, const Tolerances& tol) {
    AngleResult r;
    r.bound = bound;
    r.ratio = static_cast<double>(ratio);
    r.product = static_cast<double>(ratio * bound);
    if (std::abs(ratio) <= 1.0L + tol.csb) r.value = static_cast<double>(std::acos(std::clamp(ratio, -1.0L, 1.0L)));
    return r;
}

double spade_product(const Weight& w, const Vec2& x, const Vec2& y, const Tolerances& tol) {
    ExtVec2 a(x);
    ExtVec2 b(y);
    if (lex_less(b, a)) std::swap(a, b);
    const long double na = w.eval_ext(a);
    const long double nb = w.eval_ext(b);
    if (na <= tol.zero || nb <= tol.zero) return 0.0;
    return static_cast<double>(na * nb * unit_product(w, a / na, b / nb));
}

AngleResult thy_angle_ext(const Weight& w, const ExtVec2& x, const ExtVec2& y, const Tolerances& tol) {
    const long double nx = w.eval_ext(x);
    const long double ny = w.eval_ext(y);
    if (nx <= tol.zero || ny <= tol.zero) throw Error(ErrorCode::ZeroSetVector, "Thy angle of a zero-set vector");
    return angle_from_ratio(unit_product(w, x / nx, y / ny), static_cast<double>(nx * ny), tol);
}

AngleResult thy_angle(const Weight& w, const Vec2& x, const Vec2& y, const Tolerances& tol) {
    return thy_angle_ext(w, ExtVec2(x), ExtVec2(y), tol);
}

double euclid_angle(const Vec2& x, const Vec2& y) {
    if ((x.x1 == 0.0 && x.x2 == 0.0) || (y.x1 == 0.0 && y.x2 == 0.0))
        throw Error(ErrorCode::ZeroVector, "Euclidean angle with the zero vector");
    const long double c = cross(ExtVec2(x), ExtVec2(y));
    const long double d = dot(ExtVec2(x), ExtVec2(y));
    return static_cast<double>(std::atan2(std::abs(c), d));
}

double h_plus(const Weight& w, const Vec2& x, const Vec2& y, double t, const Tolerances& tol) {
    return static_cast<double>(w.eval_ext(sign_ext(w, ExtVec2(x), tol) + sign_ext(w, shifted(x, y, t), tol)));
}

double h_minus(const Weight& w, const Vec2& x, const Vec2& y, double t, const Tolerances& tol) {
    return static_cast<double>(w.eval_ext(sign_ext(w, ExtVec2(x), tol) - sign_ext(w, shifted(x, y, t), tol)));
}

AngleResult theta(const Weight& w, const Vec2& x, const Vec2& y, double t, const Tolerances& tol) {
    return thy_angle_ext(w, ExtVec2(x), shifted(x, y, t), tol);
}

}  // namespace angspace
