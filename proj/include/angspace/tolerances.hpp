#pragma once

namespace angspace {

/// Numeric thresholds shared by every module. The defaults leave headroom
/// above double-precision rounding; the CLI can override them per run.
struct Tolerances {
    double zero = 1e-12;         // absolute: eval(v) <= zero puts v in the zero-set
    double rel = 1e-9;           // relative agreement of weights and products
    double csb = 1e-9;           // relative slack on |ratio| <= 1 before reporting a violation
    double angle = 1e-10;        // rad, polar-coordinate inversion target accuracy
    double strict = 1e-12;       // rad per grid step for "strictly decreasing"
    double hull = 1e-3;          // relative, comparisons against sampled hulls
    double corner = 1e-9;        // sphere membership in corner verification
    double axiom_angle = 1e-6;   // rad, equalities between angle expressions
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace angspace
