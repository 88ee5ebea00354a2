#include "angspace/plane_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "angspace/angle.hpp"
#include "angspace/convexify.hpp"
#include "angspace/errors.hpp"
#include "angspace/sampling.hpp"
#include "angspace/weights.hpp"

namespace angspace {

namespace {

void check_slope(double m, double b) {
    if (!std::isfinite(m) || !std::isfinite(b)) throw Error(ErrorCode::InvalidArgument, "line parameters must be finite");
    if (b == 0.0) throw Error(ErrorCode::InvalidArgument, "line passes through the origin (b = 0)");
    if (m == 1.0) throw Error(ErrorCode::InvalidArgument, "line is parallel to y = x +- 1 (m = 1)");
}

void check_vertical(double a) {
    if (!std::isfinite(a) || a == 0.0)
        throw Error(ErrorCode::InvalidArgument, "vertical line must avoid the origin (a != 0)");
}

// |a x b| with each factor's length floored at 1, so short vectors are not
// blown up while long ones are measured relative to their size.
double scaled_cross(const Vec2& a, const Vec2& b) {
    return std::abs(cross(a, b)) / (std::max(1.0, euclid_norm(a)) * std::max(1.0, euclid_norm(b)));
}

double intercept(const Vec2& p, const Vec2& q) { return cross(p, q) / (q.x2 - p.x2); }

template <class T>
struct Worst {
    T value{};
    void add(T v) { value = std::max(value, v); }
};

}  // namespace

LinePair line_intersections(const Line& line) {
    if (const auto* v = std::get_if<VerticalLine>(&line)) {
        check_vertical(v->a);
        return {{v->a, v->a - 1.0}, {v->a, v->a + 1.0}};
    }
    const auto& l = std::get<SlopeLine>(line);
    check_slope(l.m, l.b);
    const double xs = (-1.0 - l.b) / (l.m - 1.0);
    const double xt = (1.0 - l.b) / (l.m - 1.0);
    return {{xs, xs - 1.0}, {xt, xt + 1.0}};
}

Vec2 phor(double m, double b) {
    check_slope(m, b);
    const double den = b * (m - 1.0);
    return {(m - b * b) / den, (m * m - b * b) / den};
}

std::array<Vec2, 3> phor_all_forms(double m, double b) {
    const Vec2 closed = phor(m, b);
    const double xt = (1.0 - b) / (m - 1.0);
    const double xs = (-1.0 - b) / (m - 1.0);
    const double via_t = (xt * (b + 1.0) + 1.0) / b;
    const double via_s = (xs * (b - 1.0) + 1.0) / b;
    return {closed, Vec2{via_t, m * via_t + b}, Vec2{via_s, m * via_s + b}};
}

Vec2 phor_vertical(double a) {
    check_vertical(a);
    return {a, a - 1.0 / a};
}

Vec2 phor(const Line& line) {
    if (const auto* v = std::get_if<VerticalLine>(&line)) return phor_vertical(v->a);
    const auto& l = std::get<SlopeLine>(line);
    return phor(l.m, l.b);
}

double phor_residual(const Line& line, const Vec2& p) {
    const LinePair st = line_intersections(line);
    return std::max(scaled_cross(p + Vec2{1.0, 0.0}, st.s), scaled_cross(p - Vec2{1.0, 0.0}, st.t));
}

Projections projections_and_nu(double m, double x_hat, double y_hat) {
    if (!std::isfinite(m) || !std::isfinite(x_hat) || !std::isfinite(y_hat))
        throw Error(ErrorCode::InvalidArgument, "inputs must be finite");
    if (m == 1.0 || m == -1.0) throw Error(ErrorCode::InvalidArgument, "m must differ from +-1");
    if (y_hat == 0.0) throw Error(ErrorCode::InvalidArgument, "y_hat must be nonzero");
    const double on_g = m * x_hat + 1.0;
    if (std::abs(y_hat - on_g) > 1e-12 * std::max({1.0, std::abs(y_hat), std::abs(m * x_hat)}))
        throw Error(ErrorCode::InvalidArgument, "(x_hat, y_hat) is not on y = m x + 1");

    Projections p;
    p.s_bar = (1.0 / (1.0 + m)) * Vec2{x_hat - 1.0, y_hat};
    p.t_bar = (1.0 / (1.0 - m)) * Vec2{x_hat + 1.0, y_hat};
    p.nu = intercept(p.t_bar, -p.s_bar);
    p.nu_minus = intercept(-p.t_bar, p.s_bar);
    p.same_side = (p.s_bar.x2 > 0.0) == (p.t_bar.x2 > 0.0);
    return p;
}

bool in_set1(const Vec2& p) { return p.x1 + 1.0 >= p.x2 && p.x2 >= p.x1 - 1.0; }

bool in_set2(const Vec2& p) { return -p.x1 + 1.0 >= p.x2 && p.x2 >= -p.x1 - 1.0; }

nlohmann::json prove_lemmas(std::uint64_t seed, std::size_t n) {
    using nlohmann::json;
    json out;
    out["seed"] = seed;
    out["samples"] = n;

    const Vec2 example = phor(-1.0, 5.0);
    const LinePair example_st = line_intersections(SlopeLine{-1.0, 5.0});
    out["phor_example"] = {{"m", -1.0},
                           {"b", 5.0},
                           {"p_hor", {example.x1, example.x2}},
                           {"s", {example_st.s.x1, example_st.s.x2}},
                           {"t", {example_st.t.x1, example_st.t.x2}},
                           {"exact", example == Vec2{2.6, 2.4}}};

    Worst<double> a_res, a_forms, v_res, b_col, b_nu, b_nu_minus;
    std::size_t side_mismatch = 0;
    for (std::size_t i = 0; i < n; ++i) {
        SampleStream s(seed, i);
        double m = 0.0, b = 0.0;
        do {
            m = s.uniform(-4.0, 4.0);
            b = s.uniform(-4.0, 4.0);
        } while (std::abs(b) < 0.25 || std::abs(m - 1.0) < 0.25);
        const Vec2 p = phor(m, b);
        a_res.add(phor_residual(SlopeLine{m, b}, p));
        for (const Vec2& q : phor_all_forms(m, b))
            a_forms.add(euclid_norm(q - p) / std::max(1.0, euclid_norm(p)));

        double a = 0.0;
        do a = s.uniform(-4.0, 4.0);
        while (std::abs(a) < 0.25);
        v_res.add(phor_residual(VerticalLine{a}, phor_vertical(a)));

        double mb = 0.0, xh = 0.0, yh = 0.0;
        do {
            mb = s.uniform(-4.0, 4.0);
            xh = s.uniform(-4.0, 4.0);
            yh = mb * xh + 1.0;
        } while (std::abs(mb - 1.0) < 0.25 || std::abs(mb + 1.0) < 0.25 || std::abs(yh) < 0.25);
        const Projections pr = projections_and_nu(mb, xh, yh);
        const Vec2 big_s{xh - 1.0, yh};
        const Vec2 big_t{xh + 1.0, yh};
        b_col.add(std::max({scaled_cross(big_s, pr.s_bar), scaled_cross(big_t, pr.t_bar),
                            std::abs(pr.s_bar.x2 - (mb * pr.s_bar.x1 + 1.0)) / std::max(1.0, std::abs(pr.s_bar.x2)),
                            std::abs(pr.t_bar.x2 - (mb * pr.t_bar.x1 + 1.0)) / std::max(1.0, std::abs(pr.t_bar.x2))}));
        b_nu.add(std::abs(pr.nu - 1.0));
        b_nu_minus.add(std::abs(pr.nu_minus + 1.0));
        if (pr.same_side != ((1.0 - mb) * (1.0 + mb) > 0.0)) ++side_mismatch;
    }
    out["prop_a"] = {{"max_collinearity_residual", a_res.value}, {"max_form_disagreement", a_forms.value}};
    out["prop_a_vertical"] = {{"max_collinearity_residual", v_res.value}};
    out["prop_b"] = {{"max_collinearity_residual", b_col.value},
                     {"max_nu_error", b_nu.value},
                     {"max_nu_minus_error", b_nu_minus.value},
                     {"side_mismatches", side_mismatch}};

    json sets = json::array();
    std::size_t outside_total = 0;
    for (const double p : {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()}) {
        const Weight w = Weight::holder(p);
        const SphereSample sphere = sample_sphere(w, std::max<std::size_t>(n, 8));
        std::size_t outside = 0;
        for (const Vec2& q : sphere.points)
            if (!in_set1(q) && !in_set2(q)) ++outside;
        outside_total += outside;
        sets.push_back({{"weight", w.name()}, {"points", sphere.points.size()}, {"outside", outside}});
    }
    out["set_lemma"] = sets;

    const Weight linf = Weight::holder(std::numeric_limits<double>::infinity());
    const Vec2 x{1.0, 0.0}, y{0.0, 1.0};
    Worst<double> hp, hm;
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        hp.add(std::abs(h_plus(linf, x, y, -t) - 1.0));
        hm.add(std::abs(h_minus(linf, x, y, t) - 1.0));
    }
    out["linf_constancy"] = {{"points", 101}, {"h_plus_max_dev", hp.value}, {"h_minus_max_dev", hm.value}};

    const double lim = 1e-12;
    out["pass"] = example == Vec2{2.6, 2.4} && a_res.value < lim && a_forms.value < 1e-9 && v_res.value < lim &&
                  b_col.value < lim && b_nu.value < lim && b_nu_minus.value < lim && side_mismatch == 0 &&
                  outside_total == 0 && hp.value < lim && hm.value < lim;
    return out;
}

}  // namespace angspace
