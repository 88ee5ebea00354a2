#include "angspace/corners.hpp"

#include <algorithm>
#include <cmath>

#include "angspace/angle.hpp"
#include "angspace/convexify.hpp"
#include "angspace/errors.hpp"

namespace angspace {

namespace {

constexpr double min_slope_gap = 1e-6;

void check_spec(const CornerSpec& spec) {
    if (!is_finite(spec.y_hat) || !is_finite(spec.x_bar) || !std::isfinite(spec.m_minus) ||
        !std::isfinite(spec.m_plus) || !std::isfinite(spec.eps))
        throw Error(ErrorCode::InvalidArgument, "corner spec has non-finite fields");
    if (!(spec.eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "corner eps must be positive");
    if (!(spec.m_minus < spec.m_plus)) throw Error(ErrorCode::InvalidArgument, "corner needs m_minus < m_plus");
}

}  // namespace

CornerPoints corner_points(const Weight& w, const CornerSpec& spec, double delta, const Tolerances& tol) {
    const ExtVec2 sx = sign_ext(w, ExtVec2(spec.x_bar), tol);
    const ExtVec2 sy = sign_ext(w, ExtVec2(spec.y_hat), tol);
    const long double d = delta;
    return {Vec2(d * sx + (1.0L + d * spec.m_plus) * sy), Vec2(-d * sx + (1.0L - d * spec.m_minus) * sy)};
}

double corner_residual(const Weight& w, const CornerSpec& spec, std::size_t grid_n, const Tolerances& tol) {
    check_spec(spec);
    if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "corner grid needs at least 2 points");
    double worst = 0.0;
    for (std::size_t i = 0; i < grid_n; ++i) {
        const double delta = spec.eps * static_cast<double>(i) / static_cast<double>(grid_n - 1);
        const CornerPoints p = corner_points(w, spec, delta, tol);
        worst = std::max({worst, std::abs(w.eval(p.plus) - 1.0), std::abs(w.eval(p.minus) - 1.0)});
    }
    return worst;
}

bool verify_concave_corner(const Weight& w, const CornerSpec& spec, std::size_t grid_n, const Tolerances& tol) {
    return corner_residual(w, spec, grid_n, tol) <= tol.corner;
}

QuadraticP spade_quadratic_P(const Weight& w, const CornerSpec& spec, double delta, const Tolerances& tol) {
    check_spec(spec);
    if (!(delta >= 0.0 && delta <= spec.eps)) throw Error(ErrorCode::InvalidArgument, "delta must lie in [0, eps]");
    const Vec2 sx = sign(w, spec.x_bar, tol);
    const Vec2 sy = sign(w, spec.y_hat, tol);
    const double spread = spec.m_plus - spec.m_minus;
    const double n = w.eval(2.0 * sx + (spec.m_plus + spec.m_minus) * sy);

    QuadraticP q;
    q.K = spread * spread - n * n;
    q.closed = 1.0 + delta * spread + 0.25 * delta * delta * q.K;
    const CornerPoints p = corner_points(w, spec, delta, tol);
    q.direct = spade_product(w, p.plus, p.minus, tol);
    if (std::abs(q.closed - q.direct) > tol.rel * std::max(1.0, std::abs(q.closed)))
        throw Error(ErrorCode::InternalInconsistency,
                    "closed form " + std::to_string(q.closed) + " disagrees with direct product " +
                        std::to_string(q.direct) + "; spec is not a corner of this weight");
    return q;
}

CsbWitness csb_witness_from_corner(const Weight& w, const CornerSpec& spec, const Tolerances& tol) {
    check_spec(spec);
    const Vec2 sx = sign(w, spec.x_bar, tol);
    const Vec2 sy = sign(w, spec.y_hat, tol);
    const double spread = spec.m_plus - spec.m_minus;
    const double n = w.eval(2.0 * sx + (spec.m_plus + spec.m_minus) * sy);
    const double K = spread * spread - n * n;

    auto attempt = [&](double delta) -> std::optional<CsbWitness> {
        const CornerPoints p = corner_points(w, spec, delta, tol);
        if (std::abs(w.eval(p.plus) - 1.0) > tol.corner || std::abs(w.eval(p.minus) - 1.0) > tol.corner)
            return std::nullopt;
        const double product = spade_product(w, p.plus, p.minus, tol);
        if (!(product > 1.0 + tol.csb)) return std::nullopt;
        return CsbWitness{p.plus, p.minus, product, delta};
    };

    double first = std::min(spec.eps, 0.1);
    if (K < 0.0) first = std::min(first, spread / std::max(std::abs(K), 1.0));
    if (auto hit = attempt(first)) return *hit;
    constexpr int grid = 64;
    for (int i = 1; i <= grid; ++i)
        if (auto hit = attempt(spec.eps * i / grid)) return *hit;
    throw Error(ErrorCode::NoViolationFound, "no CSB violation along the corner segments");
}

std::vector<CornerSpec> find_concave_corners(const Weight& w, std::size_t n, const Tolerances& tol) {
    const std::vector<Vec2> pts = sphere_polyline(w, n, tol);
    const std::size_t m = pts.size();
    std::vector<CornerSpec> out;
    if (m < 3) return out;
    for (std::size_t k = 0; k < m; ++k) {
        const Vec2& prev = pts[(k + m - 1) % m];
        const Vec2& p = pts[k];
        const Vec2& next = pts[(k + 1) % m];
        const double scale = euclid_norm(prev - p) * euclid_norm(next - p);
        if (!(cross(p - prev, next - p) < -1e-12 * scale)) continue;

        const Vec2 x_bar{p.x2, 0.0 - p.x1};
        if (in_zero_set(w, x_bar, tol)) continue;
        const Vec2 sx = sign(w, x_bar, tol);
        const double det = cross(sx, p);
        // Coordinates of q - p in the basis (sx, p).
        auto coords = [&](const Vec2& q) {
            const Vec2 d = q - p;
            return Vec2{cross(d, p) / det, cross(sx, d) / det};
        };
        Vec2 fwd = coords(next);
        Vec2 back = coords(prev);
        if (fwd.x1 < 0.0) std::swap(fwd, back);
        if (!(fwd.x1 > 0.0 && back.x1 < 0.0)) continue;

        CornerSpec spec{p, x_bar, std::min(fwd.x1, -back.x1), back.x2 / back.x1, fwd.x2 / fwd.x1};
        if (!(spec.m_plus - spec.m_minus > min_slope_gap)) continue;
        if (verify_concave_corner(w, spec, 101, tol)) out.push_back(spec);
    }
    return out;
}

nlohmann::json to_json(const CornerSpec& spec) {
    return {{"y_hat", {spec.y_hat.x1, spec.y_hat.x2}},
            {"x_bar", {spec.x_bar.x1, spec.x_bar.x2}},
            {"eps", spec.eps},
            {"m_minus", spec.m_minus},
            {"m_plus", spec.m_plus}};
}

nlohmann::json corner_report(const Weight& w, const std::optional<CornerSpec>& spec, std::size_t n,
                             const Tolerances& tol) {
    using nlohmann::json;
    const std::vector<CornerSpec> specs = spec ? std::vector<CornerSpec>{*spec} : find_concave_corners(w, n, tol);
    json corners = json::array();
    bool violated = false;
    for (const CornerSpec& c : specs) {
        json entry;
        entry["spec"] = to_json(c);
        const double residual = corner_residual(w, c, 101, tol);
        entry["residual"] = residual;
        entry["verified"] = residual <= tol.corner;
        json ps = json::array();
        for (const double frac : {0.0, 0.25, 0.5, 1.0}) {
            const double delta = c.eps * frac;
            try {
                const QuadraticP q = spade_quadratic_P(w, c, delta, tol);
                ps.push_back({{"delta", delta}, {"closed", q.closed}, {"direct", q.direct}, {"K", q.K}});
            } catch (const Error& e) {
                ps.push_back({{"delta", delta}, {"error", to_string(e.code())}, {"message", e.what()}});
            }
        }
        entry["P"] = ps;
        try {
            const CsbWitness wit = csb_witness_from_corner(w, c, tol);
            entry["witness"] = {{"u", {wit.u.x1, wit.u.x2}},
                                {"v", {wit.v.x1, wit.v.x2}},
                                {"product", wit.product},
                                {"delta", wit.delta}};
            violated = true;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoViolationFound) throw;
            entry["witness"] = nullptr;
        }
        corners.push_back(entry);
    }
    return {{"weight", w.name()}, {"heuristic", !spec}, {"corners", corners}, {"csb_violated", violated}};
}

}  // namespace angspace
