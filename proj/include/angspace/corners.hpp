#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "angspace/tolerances.hpp"
#include "angspace/vec2.hpp"
#include "angspace/weights.hpp"

namespace angspace {

/// A candidate concave corner of the unit sphere at sign(y_hat): for delta in
/// [0, eps] the points
///   delta sign(x_bar) + (1 + delta m_plus) sign(y_hat)
///  -delta sign(x_bar) + (1 - delta m_minus) sign(y_hat)
/// lie on the sphere, with m_minus < m_plus.
struct CornerSpec {
    Vec2 y_hat;
    Vec2 x_bar;
    double eps = 0.0;
    double m_minus = 0.0;
    double m_plus = 0.0;
};

/// The two one-sided sphere points of `spec` at offset delta.
struct CornerPoints {
    Vec2 plus;
    Vec2 minus;
};

CornerPoints corner_points(const Weight& w, const CornerSpec& spec, double delta,
                           const Tolerances& tol = default_tolerances());

/// Largest |eval - 1| over both sphere conditions at grid_n equally spaced
/// delta in [0, eps]. Throws InvalidArgument unless eps > 0, m_minus < m_plus
/// and grid_n >= 2; ZeroSetVector if y_hat or x_bar is in the zero-set.
double corner_residual(const Weight& w, const CornerSpec& spec, std::size_t grid_n = 101,
                       const Tolerances& tol = default_tolerances());

bool verify_concave_corner(const Weight& w, const CornerSpec& spec, std::size_t grid_n = 101,
                           const Tolerances& tol = default_tolerances());

struct QuadraticP {
    double closed;  // 1 + delta (m+ - m-) + delta^2 K / 4
    double direct;  // spade product of the two corner points
    double K;
};

/// Throws InternalInconsistency when closed and direct differ by more than
/// rel_tol, i.e. the spec is not a corner of w.
QuadraticP spade_quadratic_P(const Weight& w, const CornerSpec& spec, double delta,
                             const Tolerances& tol = default_tolerances());

struct CsbWitness {
    Vec2 u;
    Vec2 v;
    double product = 0.0;
    double delta = 0.0;
};

/// Unit vectors u, v from the corner with spade_product(u, v) > 1 + csb.
/// Tries delta = min(eps, 0.1) (capped at (m+ - m-)/|K| when K < 0) first,
/// then a 64-point grid over (0, eps]. Throws NoViolationFound.
CsbWitness csb_witness_from_corner(const Weight& w, const CornerSpec& spec,
                                   const Tolerances& tol = default_tolerances());

/// Slope-sweep heuristic over the sphere polyline: proposes a spec at every
/// concave turn and keeps the ones verify_concave_corner accepts.
std::vector<CornerSpec> find_concave_corners(const Weight& w, std::size_t n = 1024,
                                             const Tolerances& tol = default_tolerances());

nlohmann::json to_json(const CornerSpec& spec);

/// Verification, P(delta) samples and CSB witness for `spec`, or for every
/// corner find_concave_corners proposes when no spec is given (flagged as
/// heuristic).
nlohmann::json corner_report(const Weight& w, const std::optional<CornerSpec>& spec, std::size_t n = 1024,
                             const Tolerances& tol = default_tolerances());

}  // namespace angspace
