#include "angspace/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <utility>

#include "angspace/convexify.hpp"
#include "angspace/errors.hpp"

namespace angspace {

namespace {

using nlohmann::json;

constexpr double pi = std::numbers::pi;
constexpr double endpoint_tol = 1e-4;
constexpr int draw_attempts = 64;
constexpr std::size_t max_listed_steps = 10;

json vj(const Vec2& v) { return json::array({v.x1, v.x2}); }

json aj(const std::optional<double>& a) { return a ? json(*a) : json(nullptr); }

/// Thrown out of a check when an argument lands in the zero-set; the sample
/// is then not counted.
struct SkipSample {};

bool is_zero_error(const Error& e) {
    return e.code() == ErrorCode::ZeroSetVector || e.code() == ErrorCode::ZeroVector;
}

std::optional<double> measure(const AngleFunction& a, const Vec2& x, const Vec2& y) {
    try {
        return a.fn(x, y).value;
    } catch (const Error& e) {
        if (is_zero_error(e)) throw SkipSample{};
        throw;
    }
}

bool admissible(const Weight& w, const Vec2& v, double margin, const Tolerances& tol) {
    return is_finite(v) && !in_zero_set(w, v, tol) && w.eval(v) >= margin * euclid_norm(v);
}

std::optional<Vec2> draw(const Weight& w, const SampleOptions& opt, SampleStream& s, const Tolerances& tol) {
    for (int i = 0; i < draw_attempts; ++i) {
        const Vec2 v = opt.sampler(s);
        if (admissible(w, v, opt.zero_margin, tol)) return v;
    }
    return std::nullopt;
}

const std::pair<Vec2, Vec2> probe_pairs[] = {{{1.0, 0.0}, {0.0, 1.0}}, {{1.0, 0.0}, {1.0, 1.0}}};

/// Returns a witness on failure; may throw SkipSample.
using Check = std::function<std::optional<json>(const Vec2& x, const Vec2& y, SampleStream& s)>;

json undefined_witness(const Vec2& x, const Vec2& y, const char* what) {
    return {{"x", vj(x)}, {"y", vj(y)}, {"reason", std::string("angle undefined (CSB violation) in ") + what}};
}

AxiomEntry run_axiom(std::string id, const Weight& w, const SampleOptions& opt, const Tolerances& tol,
                     const Check& check) {
    AxiomEntry e;
    const int number = std::stoi(id.substr(2));
    e.id = std::move(id);
    e.required = number <= 5;

    auto attempt = [&](const Vec2& x, const Vec2& y, SampleStream& s) {
        try {
            auto witness = check(x, y, s);
            ++e.samples;
            if (witness) {
                e.status = AxiomStatus::Fail;
                e.witness = std::move(*witness);
                return true;
            }
        } catch (const SkipSample&) {
        }
        return false;
    };

    std::uint64_t probe_index = 0;
    for (const auto& [x, y] : probe_pairs) {
        SampleStream s(opt.seed, std::numeric_limits<std::uint64_t>::max() - probe_index++);
        if (in_zero_set(w, x, tol) || in_zero_set(w, y, tol)) continue;
        if (attempt(x, y, s)) return e;
    }
    for (std::size_t i = 0; i < opt.n; ++i) {
        SampleStream s(opt.seed, i);
        const auto x = draw(w, opt, s, tol);
        const auto y = draw(w, opt, s, tol);
        if (!x || !y) continue;
        if (attempt(*x, *y, s)) return e;
    }
    e.status = e.samples > 0 ? AxiomStatus::Pass : AxiomStatus::NotApplicable;
    return e;
}

double log_uniform(SampleStream& s, double lo, double hi) { return std::exp(s.uniform(std::log(lo), std::log(hi))); }

std::vector<AxiomEntry> basic_entries(const Weight& w, const AngleFunction& a, const SampleOptions& opt,
                                      const Tolerances& tol) {
    const double ta = tol.axiom_angle;
    std::vector<AxiomEntry> out;

    out.push_back(run_axiom("An1", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream& s) -> std::optional<json> {
        const Vec2 u = s.direction();
        const double nx = euclid_norm(x);
        const auto base = measure(a, x, y);
        if (!base) return undefined_witness(x, y, "angle(x, y)");
        double first_change = 0.0;
        for (int k = 0; k < 4; ++k) {
            const double rel = std::pow(10.0, -(2 * k + 3));
            const Vec2 xp = x + (rel * nx) * u;
            const auto moved = measure(a, xp, y);
            if (!moved) return undefined_witness(xp, y, "angle(x + delta u, y)");
            const double change = std::abs(*moved - *base);
            if (k == 0) first_change = change;
            if (k == 3) {
                const double allowance =
                    std::max(10.0 * first_change / std::sqrt(1e-3), 1.0) * std::sqrt(rel) + 1e-9;
                if (change > allowance)
                    return json{{"x", vj(x)}, {"y", vj(y)}, {"u", vj(u)}, {"delta", rel * nx},
                                {"angle", *base}, {"perturbed_angle", *moved}, {"change", change},
                                {"allowance", allowance}};
            }
        }
        return std::nullopt;
    }));

    out.push_back(run_axiom("An2", w, opt, tol, [&](const Vec2& x, const Vec2&, SampleStream&) -> std::optional<json> {
        const auto v = measure(a, x, x);
        if (!v || std::abs(*v) > ta) return json{{"x", vj(x)}, {"angle_x_x", aj(v)}, {"expected", 0.0}};
        return std::nullopt;
    }));

    out.push_back(run_axiom("An3", w, opt, tol, [&](const Vec2& x, const Vec2&, SampleStream&) -> std::optional<json> {
        const auto v = measure(a, -x, x);
        if (!v || std::abs(*v - pi) > ta) return json{{"x", vj(x)}, {"angle_negx_x", aj(v)}, {"expected", pi}};
        return std::nullopt;
    }));

    out.push_back(run_axiom("An4", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream&) -> std::optional<json> {
        const auto xy = measure(a, x, y);
        const auto yx = measure(a, y, x);
        if (!xy || !yx || std::abs(*xy - *yx) > ta)
            return json{{"x", vj(x)}, {"y", vj(y)}, {"angle_x_y", aj(xy)}, {"angle_y_x", aj(yx)}};
        return std::nullopt;
    }));

    out.push_back(run_axiom("An5", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream& s) -> std::optional<json> {
        const double r = log_uniform(s, 1e-2, 1e2);
        const double q = log_uniform(s, 1e-2, 1e2);
        const auto plain = measure(a, x, y);
        const auto scaled = measure(a, r * x, q * y);
        if (!plain || !scaled || std::abs(*plain - *scaled) > ta)
            return json{{"x", vj(x)}, {"y", vj(y)}, {"r", r}, {"s", q}, {"angle_x_y", aj(plain)},
                        {"angle_rx_sy", aj(scaled)}};
        return std::nullopt;
    }));

    out.push_back(run_axiom("An6", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream&) -> std::optional<json> {
        const auto plain = measure(a, x, y);
        const auto negated = measure(a, -x, -y);
        if (!plain || !negated || std::abs(*plain - *negated) > ta)
            return json{{"x", vj(x)}, {"y", vj(y)}, {"angle_x_y", aj(plain)}, {"angle_negx_negy", aj(negated)}};
        return std::nullopt;
    }));

    out.push_back(run_axiom("An7", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream&) -> std::optional<json> {
        const auto plain = measure(a, x, y);
        const auto opposite = measure(a, -x, y);
        if (!plain || !opposite || std::abs(*plain + *opposite - pi) > ta)
            return json{{"x", vj(x)}, {"y", vj(y)}, {"angle_x_y", aj(plain)}, {"angle_negx_y", aj(opposite)},
                        {"expected_sum", pi}};
        return std::nullopt;
    }));
    return out;
}

std::vector<AxiomEntry> additivity_entries(const Weight& w, const AngleFunction& a, const SampleOptions& opt,
                                           const Tolerances& tol) {
    const double ta = tol.axiom_angle;
    std::vector<AxiomEntry> out;

    out.push_back(run_axiom("An8", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream&) -> std::optional<json> {
        const auto first = measure(a, x, x + y);
        const auto second = measure(a, x + y, y);
        const auto whole = measure(a, x, y);
        if (!first || !second || !whole) return undefined_witness(x, y, "An8 terms");
        const double gap = *first + *second - *whole;
        if (std::abs(gap) > ta)
            return json{{"x", vj(x)}, {"y", vj(y)}, {"angle_x_xplusy", *first}, {"angle_xplusy_y", *second},
                        {"lhs", *first + *second}, {"rhs", *whole}, {"gap", gap}};
        return std::nullopt;
    }));

    out.push_back(run_axiom("An9", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream&) -> std::optional<json> {
        const auto at0 = measure(a, x, y);
        const auto atx = measure(a, -x, y - x);
        const auto aty = measure(a, -y, x - y);
        if (!at0 || !atx || !aty) return undefined_witness(x, y, "An9 terms");
        const double sum = *at0 + *atx + *aty;
        if (std::abs(sum - pi) > ta)
            return json{{"x", vj(x)}, {"y", vj(y)}, {"angles", {*at0, *atx, *aty}}, {"sum", sum},
                        {"gap", sum - pi}};
        return std::nullopt;
    }));

    out.push_back(run_axiom("An10", w, opt, tol, [&](const Vec2& x, const Vec2& y, SampleStream&) -> std::optional<json> {
        const auto first = measure(a, y, y - x);
        const auto second = measure(a, x, x - y);
        const auto rhs = measure(a, -x, y);
        if (!first || !second || !rhs) return undefined_witness(x, y, "An10 terms");
        const double gap = *first + *second - *rhs;
        if (std::abs(gap) > ta)
            return json{{"x", vj(x)}, {"y", vj(y)}, {"angle_y_yminusx", *first}, {"angle_x_xminusy", *second},
                        {"lhs", *first + *second}, {"rhs", *rhs}, {"gap", gap}};
        return std::nullopt;
    }));
    return out;
}

using ThetaEval = std::function<std::optional<double>(double t)>;

An11Result scan_theta(const ThetaEval& theta_at, const std::vector<double>& grid, const Tolerances& tol) {
    An11Result r;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(grid.size());
    for (const double t : grid) {
        try {
            const auto v = theta_at(t);
            ++r.evaluated;
            if (v)
                pts.emplace_back(t, *v);
            else
                r.undefined_at.push_back(t);
        } catch (const Error& e) {
            if (!is_zero_error(e)) throw;
            r.zero_set_hits.push_back(t);
        }
    }

    std::size_t run = 0;
    double biggest = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto [t0, th0] = pts[i];
        const auto [t1, th1] = pts[i + 1];
        const double drop = th0 - th1;
        if (-drop > tol.strict) r.monotone_violations.push_back({t0, t1, th0, th1});
        if (drop <= tol.strict) {
            ++r.plateau_steps;
            r.longest_plateau = std::max(r.longest_plateau, ++run);
        } else {
            run = 0;
        }
        if (drop > biggest) {
            biggest = drop;
            r.largest_drop = {t0, t1, th0, th1};
        }
    }
    r.endpoint_gap = pts.size() < 2 ? std::numeric_limits<double>::infinity()
                                    : std::max(std::abs(pts.front().second - pi), std::abs(pts.back().second));
    const bool ok = pts.size() >= 2 && r.monotone_violations.empty() && r.longest_plateau < 2 &&
                    r.zero_set_hits.empty() && r.undefined_at.empty() && r.endpoint_gap < endpoint_tol;
    r.status = ok ? AxiomStatus::Pass : AxiomStatus::Fail;
    return r;
}

void check_an11_inputs(const Vec2& x, const Vec2& y) {
    if (!is_finite(x) || !is_finite(y)) throw Error(ErrorCode::InvalidArgument, "x and y must be finite");
    if (cross(x, y) == 0.0) throw Error(ErrorCode::InvalidArgument, "x and y must be linearly independent");
}

json steps_json(const std::vector<MonotoneViolation>& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size() && i < max_listed_steps; ++i)
        out.push_back({{"t0", v[i].t0}, {"t1", v[i].t1}, {"theta0", v[i].theta0}, {"theta1", v[i].theta1}});
    return out;
}

json head(const std::vector<double>& v) {
    return json(std::vector<double>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(v.size(), max_listed_steps))));
}

}  // namespace

const char* to_string(AxiomStatus s) {
    switch (s) {
        case AxiomStatus::Pass: return "pass";
        case AxiomStatus::Fail: return "fail";
        case AxiomStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

const AxiomEntry* AxiomReport::find(const std::string& id) const {
    for (const auto& e : axioms)
        if (e.id == id) return &e;
    return nullptr;
}

nlohmann::json AxiomReport::to_json() const {
    json list = json::array();
    for (const auto& e : axioms) {
        json j{{"id", e.id}, {"status", to_string(e.status)}, {"samples", e.samples}, {"required", e.required}};
        if (e.witness) j["witness"] = *e.witness;
        list.push_back(std::move(j));
    }
    return {{"weight", weight}, {"angle", angle}, {"seed", seed}, {"axioms", std::move(list)}};
}

AngleFunction thy_angle_function(const Weight& w, const Tolerances& tol) {
    return {"thy", [w, tol](const Vec2& x, const Vec2& y) { return thy_angle(w, x, y, tol); }};
}

AngleFunction generalized_angle_function(const Weight& w, std::size_t n, const Tolerances& tol) {
    auto hull = std::make_shared<const HullPolygon>(weight_hull(w, n, tol));
    if (!is_normable(*hull)) throw Error(ErrorCode::NotNormable, "conv(B) of " + w.name() + " is not a norm ball");
    return {"generalized",
            [hull, tol](const Vec2& x, const Vec2& y) { return generalized_thy_angle(*hull, x, y, tol); }};
}

AxiomReport check_basic(const Weight& w, const AngleFunction& angle, const SampleOptions& opt,
                        const Tolerances& tol) {
    return {w.name(), angle.label, opt.seed, basic_entries(w, angle, opt, tol)};
}

AxiomReport check_additivity(const Weight& w, const AngleFunction& angle, const SampleOptions& opt,
                             const Tolerances& tol) {
    return {w.name(), angle.label, opt.seed, additivity_entries(w, angle, opt, tol)};
}

std::vector<double> standard_theta_grid() {
    constexpr int per_decade = 40;
    constexpr int decades = 5;
    std::vector<double> g;
    for (int j = per_decade * decades; j >= 1; --j) g.push_back(-std::pow(10.0, 1.0 + j / double(per_decade)));
    for (int i = 0; i <= 200; ++i) g.push_back((i - 100) / 10.0);
    for (int j = 1; j <= per_decade * decades; ++j) g.push_back(std::pow(10.0, 1.0 + j / double(per_decade)));
    return g;
}

nlohmann::json An11Result::to_json(const Vec2& x, const Vec2& y) const {
    return {{"x", vj(x)},
            {"y", vj(y)},
            {"status", to_string(status)},
            {"evaluated", evaluated},
            {"monotone_violation_count", monotone_violations.size()},
            {"monotone_violations", steps_json(monotone_violations)},
            {"plateau_steps", plateau_steps},
            {"longest_plateau", longest_plateau},
            {"zero_set_hits", head(zero_set_hits)},
            {"undefined_at", head(undefined_at)},
            {"endpoint_gap", endpoint_gap},
            {"largest_drop",
             {{"t0", largest_drop.t0}, {"t1", largest_drop.t1}, {"theta0", largest_drop.theta0},
              {"theta1", largest_drop.theta1}}}};
}

An11Result check_an11(const Weight& w, const Vec2& x, const Vec2& y, const std::vector<double>& grid,
                      const Tolerances& tol) {
    check_an11_inputs(x, y);
    if (in_zero_set(w, x, tol) || in_zero_set(w, y, tol))
        throw Error(ErrorCode::ZeroSetVector, "x or y lies in the zero-set");
    return scan_theta([&](double t) { return theta(w, x, y, t, tol).value; }, grid, tol);
}

An11Result check_an11(const AngleFunction& angle, const Vec2& x, const Vec2& y, const std::vector<double>& grid,
                      const Tolerances& tol) {
    check_an11_inputs(x, y);
    return scan_theta([&](double t) { return angle.fn(x, y + t * x).value; }, grid, tol);
}

AxiomReport check_all(const Weight& w, const AngleFunction& angle, const SampleOptions& opt,
                      std::size_t an11_pairs, const Tolerances& tol) {
    AxiomReport report = check_basic(w, angle, opt, tol);
    for (auto& e : additivity_entries(w, angle, opt, tol)) report.axioms.push_back(std::move(e));

    AxiomEntry e;
    e.id = "An11";
    const std::vector<double> grid = standard_theta_grid();
    const bool thy = angle.label == "thy";
    auto run_pair = [&](const Vec2& x, const Vec2& y) {
        if (in_zero_set(w, x, tol) || in_zero_set(w, y, tol) || cross(x, y) == 0.0) return false;
        const An11Result r = thy ? check_an11(w, x, y, grid, tol) : check_an11(angle, x, y, grid, tol);
        ++e.samples;
        if (r.status == AxiomStatus::Fail) {
            e.status = AxiomStatus::Fail;
            e.witness = r.to_json(x, y);
            return true;
        }
        return false;
    };
    bool failed = false;
    for (const auto& [x, y] : probe_pairs)
        if ((failed = run_pair(x, y))) break;
    for (std::size_t i = 0; i < an11_pairs && !failed; ++i) {
        SampleStream s(opt.seed, opt.n + i);
        const auto x = draw(w, opt, s, tol);
        const auto y = draw(w, opt, s, tol);
        if (!x || !y) continue;
        if (std::abs(cross(*x, *y)) < 1e-3 * euclid_norm(*x) * euclid_norm(*y)) continue;
        failed = run_pair(*x, *y);
    }
    if (!failed) e.status = e.samples > 0 ? AxiomStatus::Pass : AxiomStatus::NotApplicable;
    report.axioms.push_back(std::move(e));
    return report;
}

nlohmann::json CsbScanResult::to_json(const std::string& weight, std::uint64_t seed) const {
    json cs = json::array();
    for (const auto& c : corners) cs.push_back(angspace::to_json(c));
    json vs = json::array();
    for (const auto& v : violations)
        vs.push_back({{"x", vj(v.x)}, {"y", vj(v.y)}, {"product", v.product}, {"bound", v.bound},
                      {"ratio", v.product / v.bound}});
    return {{"weight", weight},         {"seed", seed},     {"samples", samples},
            {"violation_count", violation_count}, {"corners", cs}, {"violations", vs}};
}

CsbScanResult csb_scan(const Weight& w, const SampleOptions& opt, std::vector<CornerSpec> corners,
                       std::size_t max_listed, const Tolerances& tol) {
    CsbScanResult r;
    r.corners = corners.empty() ? find_concave_corners(w, 1024, tol) : std::move(corners);

    auto test = [&](const Vec2& x, const Vec2& y) {
        AngleResult a;
        try {
            a = thy_angle(w, x, y, tol);
        } catch (const Error& e) {
            if (is_zero_error(e)) return;
            throw;
        }
        if (a.csb_ok()) return;
        ++r.violation_count;
        if (r.violations.size() < max_listed) r.violations.push_back({x, y, a.product, a.bound});
    };

    for (const auto& c : r.corners) {
        try {
            const CsbWitness wit = csb_witness_from_corner(w, c, tol);
            test(wit.u, wit.v);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoViolationFound) throw;
        }
    }

    const auto pick_radius = [](SampleStream& s) { return log_uniform(s, 0.1, 10.0); };
    for (std::size_t i = 0; i < opt.n; ++i) {
        SampleStream s(opt.seed, i);
        ++r.samples;
        if (i % 2 == 1 && !r.corners.empty()) {
            const CornerSpec& c = r.corners[s.next_u64() % r.corners.size()];
            const double d1 = s.uniform() * c.eps;
            const double d2 = s.uniform() * c.eps;
            const CornerPoints p = corner_points(w, c, d1, tol);
            const CornerPoints q = corner_points(w, c, d2, tol);
            const double jitter = 1e-3 * c.eps;
            const double rx = pick_radius(s);
            const double jx = jitter * s.uniform();
            const Vec2 dx = s.direction();
            const double ry = pick_radius(s);
            const double jy = jitter * s.uniform();
            const Vec2 dy = s.direction();
            test(rx * (p.plus + jx * dx), ry * (q.minus + jy * dy));
            continue;
        }
        const auto x = draw(w, opt, s, tol);
        const auto y = draw(w, opt, s, tol);
        if (x && y) test(*x, *y);
    }
    return r;
}

}  // namespace angspace
