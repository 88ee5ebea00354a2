#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <variant>

#include <json.hpp>

#include "angspace/vec2.hpp"

namespace angspace {

/// y = m x + b.
struct SlopeLine {
    double m;
    double b;
};

/// x = a.
struct VerticalLine {
    double a;
};

using Line = std::variant<SlopeLine, VerticalLine>;

/// The lines y = x - 1 and y = x + 1 that the construction intersects.
inline constexpr SlopeLine g_s{1.0, -1.0};
inline constexpr SlopeLine g_t{1.0, 1.0};

/// Intersections S = L with y = x - 1 and T = L with y = x + 1.
struct LinePair {
    Vec2 s;
    Vec2 t;
};

/// Throws InvalidArgument (b = 0, m = 1, a = 0, or non-finite input).
LinePair line_intersections(const Line& line);

/// The unique point P with (0,0), P + (1,0), S collinear and (0,0), P - (1,0),
/// T collinear, for L: y = m x + b.
Vec2 phor(double m, double b);

/// phor evaluated by its closed form and by the two x_S / x_T forms.
std::array<Vec2, 3> phor_all_forms(double m, double b);

/// phor for the vertical line x = a: (a, a - 1/a).
Vec2 phor_vertical(double a);

Vec2 phor(const Line& line);

/// Largest collinearity defect |a x b| / (max(1, |a|) max(1, |b|)) of the two
/// conditions at P.
double phor_residual(const Line& line, const Vec2& p);

struct Projections {
    Vec2 s_bar;
    Vec2 t_bar;
    double nu;        // x-intercept of the line through t_bar and -s_bar
    double nu_minus;  // x-intercept of the line through -t_bar and s_bar
    bool same_side;   // s_bar and t_bar strictly on one side of the x-axis
};

/// For (x_hat, y_hat) on G: y = m x + 1, S_bar = (x_hat - 1, y_hat)/(1 + m) and
/// T_bar = (x_hat + 1, y_hat)/(1 - m). Throws InvalidArgument for m = +-1,
/// y_hat = 0, or a point off G (relative 1e-12).
Projections projections_and_nu(double m, double x_hat, double y_hat);

/// x + 1 >= y >= x - 1
bool in_set1(const Vec2& p);
/// -x + 1 >= y >= -x - 1
bool in_set2(const Vec2& p);

/// Randomized check of the plane lemmas, the unit-ball containment in
/// Set1 u Set2 and the max-norm constancy intervals of h+ and h-.
nlohmann::json prove_lemmas(std::uint64_t seed, std::size_t n);

}  // namespace angspace
