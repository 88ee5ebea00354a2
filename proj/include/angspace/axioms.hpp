#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "angspace/angle.hpp"
#include "angspace/corners.hpp"
#include "angspace/sampling.hpp"
#include "angspace/tolerances.hpp"
#include "angspace/vec2.hpp"
#include "angspace/weights.hpp"

namespace angspace {

enum class AxiomStatus { Pass, Fail, NotApplicable };

const char* to_string(AxiomStatus s);

struct AxiomEntry {
    std::string id;  // "An1" .. "An11"
    AxiomStatus status = AxiomStatus::NotApplicable;
    std::size_t samples = 0;
    bool required = false;  // An1-An5
    std::optional<nlohmann::json> witness;
};

struct AxiomReport {
    std::string weight;
    std::string angle;  // "thy" or "generalized"
    std::uint64_t seed = 0;
    std::vector<AxiomEntry> axioms;

    const AxiomEntry* find(const std::string& id) const;
    nlohmann::json to_json() const;
};

/// An angle function (x, y) -> AngleResult. May throw ZeroSetVector/ZeroVector.
using AngleFn = std::function<AngleResult(const Vec2&, const Vec2&)>;

struct AngleFunction {
    std::string label;
    AngleFn fn;
};

AngleFunction thy_angle_function(const Weight& w, const Tolerances& tol = default_tolerances());
/// Builds conv(B) once; throws NotNormable.
AngleFunction generalized_angle_function(const Weight& w, std::size_t n = 1024,
                                         const Tolerances& tol = default_tolerances());

/// Options shared by the sampled checks. Vectors whose weight is below
/// `zero_margin` times their Euclidean length are rejected as too close to
/// the zero-set.
struct SampleOptions {
    std::uint64_t seed = 0;
    std::size_t n = 10000;
    VectorSampler sampler = uniform_vectors();
    double zero_margin = 0.1;
};

/// An1-An7. An1 is probed by perturbations x + delta u with delta = 10^-3 ..
/// 10^-9 |x|; it fails when the angle change at the smallest delta exceeds
/// an allowance extrapolated from the largest one with a square-root modulus.
AxiomReport check_basic(const Weight& w, const AngleFunction& angle, const SampleOptions& opt,
                        const Tolerances& tol = default_tolerances());

/// An8-An10.
AxiomReport check_additivity(const Weight& w, const AngleFunction& angle, const SampleOptions& opt,
                             const Tolerances& tol = default_tolerances());

/// t grid for Theta: the linear core -10, -9.9, ..., 10 plus 40 log-spaced
/// points per decade out to +-10^6, ascending.
std::vector<double> standard_theta_grid();

struct MonotoneViolation {
    double t0, t1;
    double theta0, theta1;
};

struct An11Result {
    AxiomStatus status = AxiomStatus::Pass;
    std::size_t evaluated = 0;
    std::vector<MonotoneViolation> monotone_violations;  // increases beyond strict tol
    std::size_t plateau_steps = 0;                       // steps that do not decrease by more than strict tol
    std::size_t longest_plateau = 0;                     // consecutive such steps
    std::vector<double> zero_set_hits;                   // t with y + t x in the zero-set
    std::vector<double> undefined_at;                    // t with a CSB violation
    double endpoint_gap = 0.0;                           // max(|Theta(t_min) - pi|, |Theta(t_max)|)
    MonotoneViolation largest_drop{};

    nlohmann::json to_json(const Vec2& x, const Vec2& y) const;
};

/// Theta(t) = thy_angle(x, y + t x) on `grid`. Passes iff no step increases by
/// more than strict tol, no plateau spans two steps, nothing is in the
/// zero-set or undefined, and both endpoints are within 1e-4 of pi and 0.
An11Result check_an11(const Weight& w, const Vec2& x, const Vec2& y, const std::vector<double>& grid,
                      const Tolerances& tol = default_tolerances());
/// Same through an arbitrary angle function (y + t x rounded to double).
An11Result check_an11(const AngleFunction& angle, const Vec2& x, const Vec2& y, const std::vector<double>& grid,
                      const Tolerances& tol = default_tolerances());

/// An1-An11. An11 runs on the fixed pairs ((1,0),(0,1)) and ((1,0),(1,1))
/// where admissible, then `an11_pairs` random pairs.
AxiomReport check_all(const Weight& w, const AngleFunction& angle, const SampleOptions& opt,
                      std::size_t an11_pairs = 20, const Tolerances& tol = default_tolerances());

struct CsbViolation {
    Vec2 x;
    Vec2 y;
    double product;
    double bound;
};

struct CsbScanResult {
    std::size_t samples = 0;
    std::size_t violation_count = 0;
    std::vector<CsbViolation> violations;  // the first `max_listed`
    std::vector<CornerSpec> corners;

    nlohmann::json to_json(const std::string& weight, std::uint64_t seed) const;
};

/// Looks for pairs with |<x|y>| > (1 + csb) ||x|| ||y||. Witnesses from the
/// corners (declared, or found by find_concave_corners when `corners` is
/// empty) come first; then every odd sample is drawn from the two straight
/// sphere segments of a corner, every even one from `opt.sampler`.
CsbScanResult csb_scan(const Weight& w, const SampleOptions& opt, std::vector<CornerSpec> corners = {},
                       std::size_t max_listed = 100, const Tolerances& tol = default_tolerances());

}  // namespace angspace
