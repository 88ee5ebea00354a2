#include "angspace/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "angspace/errors.hpp"
#include "angspace/sampling.hpp"

namespace angspace {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::ZeroSetVector: return "ZeroSetVector";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotBracketed: return "NotBracketed";
        case ErrorCode::MonotonicityViolated: return "MonotonicityViolated";
        case ErrorCode::NotNormable: return "NotNormable";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::UnboundedDirection: return "UnboundedDirection";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::NoViolationFound: return "NoViolationFound";
        case ErrorCode::NotStarShaped: return "NotStarShaped";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string shortest(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

long double holder_eval(double p, long double a, long double b) {
    a = std::abs(a);
    b = std::abs(b);
    if (p == 1.0) return a + b;
    if (p == 2.0) return std::hypot(a, b);
    if (std::isinf(p)) return std::max(a, b);
    const long double m = std::max(a, b);
    if (m == 0.0L) return 0.0L;
    const long double lp = p;
    return m * std::pow(std::pow(a / m, lp) + std::pow(b / m, lp), 1.0L / lp);
}

}  // namespace

Weight Weight::holder(double p) {
    if (!(p > 0.0) || std::isnan(p)) throw Error(ErrorCode::InvalidArgument, "Holder exponent must be > 0");
    Weight w;
    w.kind_ = WeightKind::Holder;
    w.parameter_ = p;
    w.claims_ = {p >= 1.0, p >= 1.0, true};
    w.name_ = "lp:" + shortest(p);
    return w;
}

Weight Weight::polygon(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "polygon parameter r must be > 0");
    const Vec2 hexagon[] = {{0.0, r}, {1.0, 1.0}, {1.0, -1.0}, {0.0, -r}, {-1.0, -1.0}, {-1.0, 1.0}};
    Weight w;
    w.kind_ = WeightKind::Polygon;
    w.parameter_ = r;
    w.claims_ = {r >= 1.0, r >= 1.0, true};
    w.name_ = "polygon:" + shortest(r);
    w.sphere_ = std::make_shared<const StarPolygon>(hexagon);
    return w;
}

Weight Weight::axis_seminorm() {
    Weight w;
    w.kind_ = WeightKind::AxisSeminorm;
    w.claims_ = {false, true, true};
    w.name_ = "axis";
    return w;
}

Weight Weight::hyperbola() {
    Weight w;
    w.kind_ = WeightKind::Hyperbola;
    w.claims_ = {false, false, true};
    w.name_ = "hyperbola";
    return w;
}

Weight Weight::custom_sphere(std::span<const Vec2> polyline, std::string name) {
    auto sphere = std::make_shared<const StarPolygon>(polyline);
    if (!sphere->is_centrally_symmetric(1e-9))
        throw Error(ErrorCode::InvalidArgument,
                    "sphere polyline must be centrally symmetric (absolute homogeneity needs ||-v|| = ||v||)");
    Weight w;
    w.kind_ = WeightKind::CustomSphere;
    const bool convex = sphere->is_convex(1e-12);
    w.claims_ = {convex, convex, true};
    w.name_ = std::move(name);
    w.sphere_ = std::move(sphere);
    return w;
}

Weight Weight::custom_fn(Evaluator fn, WeightClaims claims, std::string name) {
    if (!fn) throw Error(ErrorCode::InvalidArgument, "custom weight needs an evaluator");
    Weight w;
    w.kind_ = WeightKind::CustomFn;
    w.claims_ = claims;
    w.name_ = std::move(name);
    w.fn_ = std::make_shared<const Evaluator>(std::move(fn));
    return w;
}

long double Weight::eval_ext(const ExtVec2& v) const {
    switch (kind_) {
        case WeightKind::Holder: return holder_eval(parameter_, v.x1, v.x2);
        case WeightKind::Polygon:
        case WeightKind::CustomSphere: return sphere_->gauge(v);
        case WeightKind::AxisSeminorm: return std::abs(v.x1);
        case WeightKind::Hyperbola: return std::sqrt(std::abs(v.x1)) * std::sqrt(std::abs(v.x2));
        case WeightKind::CustomFn: return (*fn_)(Vec2(v));
    }
    return 0.0L;
}

double Weight::eval(const Vec2& v) const { return static_cast<double>(eval_ext(ExtVec2(v))); }

bool in_zero_set(const Weight& w, const Vec2& v, const Tolerances& tol) { return w.eval(v) <= tol.zero; }

ExtVec2 sign_ext(const Weight& w, const ExtVec2& v, const Tolerances& tol) {
    const long double n = w.eval_ext(v);
    if (!(n > tol.zero)) throw Error(ErrorCode::ZeroSetVector, "sign() of a zero-set vector");
    return v / n;
}

Vec2 sign(const Weight& w, const Vec2& v, const Tolerances& tol) { return Vec2(sign_ext(w, ExtVec2(v), tol)); }

std::optional<HomogeneityViolation> validate_homogeneity(const Weight& w, std::uint64_t seed, std::size_t n,
                                                         const Tolerances& tol) {
    const auto sampler = uniform_vectors(1e-3, 1e3);
    for (std::size_t i = 0; i < n; ++i) {
        SampleStream s(seed, i);
        const Vec2 v = sampler(s);
        double r = std::exp(s.uniform(std::log(1e-3), std::log(1e3)));
        if (s.uniform() < 0.5) r = -r;
        const double base = w.eval(v);
        const double lhs = w.eval(r * v);
        const double rhs = std::abs(r) * base;
        if (!(base >= 0.0) || !(lhs >= 0.0) || std::abs(lhs - rhs) > tol.rel * std::max(rhs, tol.zero))
            return HomogeneityViolation{v, r, lhs, rhs};
    }
    return std::nullopt;
}

std::optional<TriangleViolation> find_triangle_violation(const Weight& w, std::uint64_t seed, std::size_t n,
                                                         double slack) {
    auto check = [&](const Vec2& x, const Vec2& y) -> std::optional<TriangleViolation> {
        const double lhs = w.eval(x + y);
        const double rhs = w.eval(x) + w.eval(y);
        if (lhs > rhs + slack * std::max(1.0, rhs)) return TriangleViolation{x, y, lhs, rhs};
        return std::nullopt;
    };
    if (auto v = check({1.0, 0.0}, {0.0, 1.0})) return v;
    const auto sampler = uniform_vectors(0.1, 10.0);
    for (std::size_t i = 0; i < n; ++i) {
        SampleStream s(seed, i);
        const Vec2 x = sampler(s);
        const Vec2 y = sampler(s);
        if (auto v = check(x, y)) return v;
    }
    return std::nullopt;
}

}  // namespace angspace
