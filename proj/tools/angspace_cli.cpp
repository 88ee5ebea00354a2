// angspace command-line front end. Links only the C API.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "angspace/angspace.h"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_csb = 2;
constexpr double pi = 3.14159265358979323846;

struct Failure {
    std::string message;
    int code = exit_error;
};

struct WeightDeleter {
    void operator()(angsp_weight* w) const { angsp_weight_free(w); }
};
using WeightPtr = std::unique_ptr<angsp_weight, WeightDeleter>;

struct HullDeleter {
    void operator()(angsp_hull* h) const { angsp_hull_free(h); }
};
using HullPtr = std::unique_ptr<angsp_hull, HullDeleter>;

struct CStr {
    char* p = nullptr;
    ~CStr() { angsp_string_free(p); }
};

struct Options {
    int precision = 6;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
    angsp_tolerances tol{};
};

std::string caret_line(const std::string& input, std::size_t pos) {
    if (pos == SIZE_MAX || pos > input.size()) return {};
    return "\n  " + input + "\n  " + std::string(pos, ' ') + "^";
}

void check(angsp_status st, const std::string& context, const std::string& input = {}) {
    if (st == ANGSP_OK) return;
    std::string msg = context + ": " + angsp_status_name(st) + ": " + angsp_last_error();
    if (st == ANGSP_PARSE) msg += caret_line(input, angsp_last_error_position());
    throw Failure{msg};
}

angsp_vec2 parse_vec(const std::string& text, const char* flag) {
    angsp_vec2 v{};
    check(angsp_parse_vec2(text.c_str(), &v), std::string("bad vector for ") + flag, text);
    return v;
}

WeightPtr load_weight(const std::string& spec, const Options& opt) {
    angsp_weight* raw = nullptr;
    check(angsp_weight_parse(spec.c_str(), &raw), "bad weight spec", spec);
    WeightPtr w(raw);
    int ok = 0;
    check(angsp_validate_homogeneity(w.get(), opt.seed, 256, &opt.tol, &ok), "homogeneity check");
    if (!ok) throw Failure{"weight " + spec + " failed the homogeneity check"};
    return w;
}

std::string fmt(double x, int precision) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision == 0 ? 17 : precision, x);
    return buf;
}

double round_sig(double x, int precision) {
    if (precision == 0 || !std::isfinite(x) || x == 0.0) return x;
    return std::strtod(fmt(x, precision).c_str(), nullptr);
}

json num(double x, const Options& opt) {
    if (!std::isfinite(x)) return nullptr;
    return round_sig(x, opt.precision);
}

json vec_json(angsp_vec2 v, const Options& opt) { return json::array({num(v.x1, opt), num(v.x2, opt)}); }

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Failure{"cannot open output file " + path};
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit(const Options& opt, const std::string& text) {
    Output out(opt.out);
    out.stream() << text << '\n';
    out.stream().flush();
    if (!out.stream()) throw Failure{"write failed"};
}

std::string format_or(const Options& opt, const char* fallback) { return opt.format.empty() ? fallback : opt.format; }

void require_json(const Options& opt, const char* cmd) {
    if (!opt.format.empty() && opt.format != "json") throw Failure{std::string(cmd) + " only supports --format json"};
}

std::string csv_points(const std::vector<angsp_vec2>& pts, const Options& opt) {
    std::string s = "x1,x2";
    for (const auto& p : pts) s += "\n" + fmt(p.x1, opt.precision) + "," + fmt(p.x2, opt.precision);
    return s;
}

std::string json_points(const std::vector<angsp_vec2>& pts, const Options& opt) {
    json a = json::array();
    for (const auto& p : pts) a.push_back({{"x1", num(p.x1, opt)}, {"x2", num(p.x2, opt)}});
    return a.dump();
}

// Optional corner spec flags; either all five are set or none.
struct CornerFlags {
    std::string y_hat;
    std::string x_bar;
    std::optional<double> eps;
    std::optional<double> m_minus;
    std::optional<double> m_plus;

    void add(CLI::App* cmd) {
        cmd->add_option("--y-hat", y_hat, "Corner point direction x1,x2");
        cmd->add_option("--x-bar", x_bar, "Transverse direction x1,x2");
        cmd->add_option("--eps", eps, "Segment length parameter");
        cmd->add_option("--m-minus", m_minus, "Lower slope");
        cmd->add_option("--m-plus", m_plus, "Upper slope");
    }

    std::optional<angsp_corner_spec> get() const {
        const int given = !y_hat.empty() + !x_bar.empty() + eps.has_value() + m_minus.has_value() + m_plus.has_value();
        if (given == 0) return std::nullopt;
        if (given != 5) throw Failure{"corner spec needs all of --y-hat --x-bar --eps --m-minus --m-plus"};
        return angsp_corner_spec{parse_vec(y_hat, "--y-hat"), parse_vec(x_bar, "--x-bar"), *eps, *m_minus, *m_plus};
    }
};

int cmd_angle(const Options& opt, const std::string& weight, const std::string& xs, const std::string& ys,
              bool generalized, std::size_t hull_n) {
    const WeightPtr w = load_weight(weight, opt);
    const angsp_vec2 x = parse_vec(xs, "--x");
    const angsp_vec2 y = parse_vec(ys, "--y");
    angsp_angle a{};
    if (generalized)
        check(angsp_generalized_angle(w.get(), x, y, hull_n, &opt.tol, &a), "generalized angle");
    else
        check(angsp_thy_angle(w.get(), x, y, &opt.tol, &a), "angle");
    const double deg = a.value * 180.0 / pi;
    if (format_or(opt, "json") == "csv") {
        emit(opt, "angle_rad,angle_deg,product,csb_ok\n" + fmt(a.value, opt.precision) + "," +
                      fmt(deg, opt.precision) + "," + fmt(a.product, opt.precision) + "," + (a.csb_ok ? "1" : "0"));
    } else {
        json j = {{"weight", angsp_weight_name(w.get())},
                  {"x", vec_json(x, opt)},
                  {"y", vec_json(y, opt)},
                  {"generalized", generalized},
                  {"angle_rad", num(a.value, opt)},
                  {"angle_deg", num(deg, opt)},
                  {"product", num(a.product, opt)},
                  {"bound", num(a.bound, opt)},
                  {"csb_ok", a.csb_ok != 0}};
        emit(opt, j.dump());
    }
    if (!a.csb_ok) {
        std::cerr << "warning: CSB inequality violated, |product| exceeds " << fmt(a.bound, opt.precision) << '\n';
        return exit_csb;
    }
    return exit_ok;
}

int cmd_theta_curve(const Options& opt, const std::string& weight, const std::string& xs, const std::string& ys,
                    double t_min, double t_max, std::size_t steps) {
    if (steps < 2) throw Failure{"--steps must be at least 2"};
    if (!(t_min < t_max)) throw Failure{"--t-min must be below --t-max"};
    const WeightPtr w = load_weight(weight, opt);
    const angsp_vec2 x = parse_vec(xs, "--x");
    const angsp_vec2 y = parse_vec(ys, "--y");

    std::vector<double> ts(steps), thetas(steps);
    std::size_t undefined = 0;
    std::optional<double> first_bad;
    for (std::size_t i = 0; i < steps; ++i) {
        const double k = static_cast<double>(i), m = static_cast<double>(steps - 1);
        ts[i] = (t_min * (m - k) + t_max * k) / m;
        angsp_angle a{};
        const angsp_status st = angsp_theta(w.get(), x, y, ts[i], &opt.tol, &a);
        if (st == ANGSP_ZERO_SET_VECTOR || st == ANGSP_ZERO_VECTOR) {
            thetas[i] = std::nan("");
        } else {
            check(st, "theta at t=" + fmt(ts[i], opt.precision));
            thetas[i] = a.value;
        }
        if (std::isnan(thetas[i])) ++undefined;
        if (i > 0 && !first_bad && !(thetas[i] < thetas[i - 1])) first_bad = ts[i];
    }

    if (format_or(opt, "csv") == "json") {
        json a = json::array();
        for (std::size_t i = 0; i < steps; ++i) a.push_back({{"t", num(ts[i], opt)}, {"theta_rad", num(thetas[i], opt)}});
        emit(opt, a.dump());
    } else {
        std::string s = "t,theta_rad";
        for (std::size_t i = 0; i < steps; ++i) s += "\n" + fmt(ts[i], opt.precision) + "," + fmt(thetas[i], opt.precision);
        emit(opt, s);
    }
    if (undefined > 0) std::cerr << "warning: theta undefined at " << undefined << " grid points\n";
    if (first_bad)
        std::cerr << "warning: theta is not strictly decreasing (first at t=" << fmt(*first_bad, opt.precision)
                  << ")\n";
    return exit_ok;
}

int cmd_axioms(const Options& opt, const std::string& weight, std::size_t n, bool generalized, std::size_t hull_n) {
    require_json(opt, "axioms");
    const WeightPtr w = load_weight(weight, opt);
    CStr s;
    check(angsp_axioms_json(w.get(), generalized, opt.seed, n, hull_n, opt.precision, &opt.tol, &s.p), "axioms");
    emit(opt, s.p);
    return exit_ok;
}

int cmd_sphere(const Options& opt, const std::string& weight, std::size_t n) {
    const WeightPtr w = load_weight(weight, opt);
    std::size_t count = 0;
    angsp_status st = angsp_sphere_points(w.get(), n, &opt.tol, nullptr, 0, &count);
    if (st != ANGSP_BUFFER_TOO_SMALL) check(st, "sphere");
    std::vector<angsp_vec2> pts(count);
    check(angsp_sphere_points(w.get(), n, &opt.tol, pts.data(), pts.size(), &count), "sphere");
    emit(opt, format_or(opt, "csv") == "json" ? json_points(pts, opt) : csv_points(pts, opt));
    return exit_ok;
}

int cmd_convexify(const Options& opt, const std::string& weight, std::size_t n) {
    const WeightPtr w = load_weight(weight, opt);
    angsp_hull* raw = nullptr;
    check(angsp_hull_build(w.get(), n, &opt.tol, &raw), "convexify");
    const HullPtr h(raw);
    std::size_t count = 0;
    angsp_status st = angsp_hull_vertices(h.get(), nullptr, 0, &count);
    if (st != ANGSP_BUFFER_TOO_SMALL) check(st, "convexify");
    std::vector<angsp_vec2> pts(count);
    check(angsp_hull_vertices(h.get(), pts.data(), pts.size(), &count), "convexify");
    std::size_t unbounded = 0;
    check(angsp_hull_unbounded_count(h.get(), &unbounded), "convexify");
    emit(opt, format_or(opt, "csv") == "json" ? json_points(pts, opt) : csv_points(pts, opt));
    if (unbounded > 0) std::cerr << "warning: hull is unbounded along " << unbounded << " directions\n";
    return exit_ok;
}

int cmd_polar_encode(const Options& opt, const std::string& weight, const std::string& b1s, const std::string& b2s,
                     const std::string& vs) {
    require_json(opt, "polar");
    const WeightPtr w = load_weight(weight, opt);
    angsp_polar p{};
    check(angsp_polar_encode(w.get(), parse_vec(b1s, "--b1"), parse_vec(b2s, "--b2"), parse_vec(vs, "--v"), &opt.tol,
                             &p),
          "polar encode");
    emit(opt, json{{"rho", num(p.rho, opt)}, {"alpha", num(p.alpha, opt)}, {"alpha_deg", num(p.alpha * 180.0 / pi, opt)}}
                  .dump());
    return exit_ok;
}

int cmd_polar_decode(const Options& opt, const std::string& weight, const std::string& b1s, const std::string& b2s,
                     double rho, double alpha) {
    require_json(opt, "polar");
    const WeightPtr w = load_weight(weight, opt);
    angsp_vec2 v{};
    check(angsp_polar_decode(w.get(), parse_vec(b1s, "--b1"), parse_vec(b2s, "--b2"), angsp_polar{rho, alpha},
                             &opt.tol, &v),
          "polar decode");
    emit(opt, json{{"v", vec_json(v, opt)}}.dump());
    return exit_ok;
}

int cmd_corner(const Options& opt, const std::string& weight, const CornerFlags& flags, std::size_t n) {
    require_json(opt, "corner");
    const WeightPtr w = load_weight(weight, opt);
    const std::optional<angsp_corner_spec> spec = flags.get();
    CStr s;
    int violated = 0;
    check(angsp_corner_json(w.get(), spec ? &*spec : nullptr, n, opt.precision, &opt.tol, &s.p, &violated), "corner");
    emit(opt, s.p);
    return violated ? exit_csb : exit_ok;
}

int cmd_csb_scan(const Options& opt, const std::string& weight, const CornerFlags& flags, std::size_t n) {
    require_json(opt, "csb-scan");
    const WeightPtr w = load_weight(weight, opt);
    const std::optional<angsp_corner_spec> spec = flags.get();
    CStr s;
    std::size_t violations = 0;
    check(angsp_csb_scan_json(w.get(), opt.seed, n, spec ? &*spec : nullptr, spec ? 1 : 0, opt.precision, &opt.tol,
                              &s.p, &violations),
          "csb-scan");
    emit(opt, s.p);
    return violations > 0 ? exit_csb : exit_ok;
}

int cmd_prove_lemmas(const Options& opt, std::size_t n) {
    require_json(opt, "prove-lemmas");
    CStr s;
    int pass = 0;
    check(angsp_prove_lemmas_json(opt.seed, n, opt.precision, &s.p, &pass), "prove-lemmas");
    emit(opt, s.p);
    if (!pass) {
        std::cerr << "error: a lemma check failed\n";
        return exit_error;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized angles on homogeneously weighted planes.\n"
                 "Weights: lp:<p>, polygon:<r>, axis, hyperbola, sphere-file:<path>.\n"
                 "Exit codes: 0 ok, 1 usage or computation error, 2 CSB violation."};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    angsp_default_tolerances(&opt.tol);
    app.add_option("--precision", opt.precision, "Significant digits in output (0 = round-trip)")
        ->capture_default_str()
        ->check(CLI::Range(0, 17));
    app.add_option("--seed", opt.seed, "Random seed")->envname("ANGLE_SPACE_SEED")->capture_default_str();
    app.add_option("--out", opt.out, "Write output to this file instead of stdout");
    app.add_option("--format", opt.format, "Output format (default depends on command)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol-zero", opt.tol.zero, "Zero-set tolerance")->capture_default_str();
    app.add_option("--tol-rel", opt.tol.rel, "Relative tolerance")->capture_default_str();
    app.add_option("--tol-csb", opt.tol.csb, "CSB violation margin")->capture_default_str();
    app.add_option("--tol-angle", opt.tol.angle, "Angle tolerance")->capture_default_str();
    app.add_option("--tol-strict", opt.tol.strict, "Strict monotonicity margin")->capture_default_str();
    app.add_option("--tol-hull", opt.tol.hull, "Hull sampling tolerance")->capture_default_str();
    app.add_option("--tol-corner", opt.tol.corner, "Corner verification tolerance")->capture_default_str();
    app.add_option("--tol-axiom-angle", opt.tol.axiom_angle, "Axiom angle tolerance")->capture_default_str();

    std::string weight, xs, ys;
    bool generalized = false;
    std::size_t hull_n = 1024;

    auto* angle = app.add_subcommand("angle", "Thy angle (or generalized angle) between two vectors");
    angle->add_option("--weight", weight, "Weight spec")->required();
    angle->add_option("--x", xs, "First vector x1,x2")->required();
    angle->add_option("--y", ys, "Second vector x1,x2")->required();
    angle->add_flag("--generalized", generalized, "Use the angle of the convex hull norm");
    angle->add_option("--hull-n", hull_n, "Sphere samples for the hull")->capture_default_str();

    double t_min = -10.0, t_max = 10.0;
    std::size_t steps = 201;
    auto* curve = app.add_subcommand("theta-curve", "CSV of theta(t) = angle(x, y + t x)");
    curve->add_option("--weight", weight, "Weight spec")->required();
    curve->add_option("--x", xs, "Vector x")->required();
    curve->add_option("--y", ys, "Vector y")->required();
    curve->add_option("--t-min", t_min, "First t")->capture_default_str();
    curve->add_option("--t-max", t_max, "Last t")->capture_default_str();
    curve->add_option("--steps", steps, "Number of rows")->capture_default_str();

    std::size_t n_axioms = 10000;
    auto* axioms = app.add_subcommand("axioms", "JSON report on the angle-space axioms An1 to An11");
    axioms->add_option("--weight", weight, "Weight spec")->required();
    axioms->add_option("--n", n_axioms, "Random samples per axiom")->capture_default_str();
    axioms->add_flag("--generalized", generalized, "Check the generalized angle instead");
    axioms->add_option("--hull-n", hull_n, "Sphere samples for the hull")->capture_default_str();

    std::size_t n_sphere = 1024;
    auto* sphere = app.add_subcommand("sphere", "CSV polyline of the unit sphere");
    sphere->add_option("--weight", weight, "Weight spec")->required();
    sphere->add_option("--n", n_sphere, "Samples (polygonal weights return their vertices)")->capture_default_str();

    std::string b1s, b2s, vs;
    double rho = 0.0, alpha = 0.0;
    auto* polar = app.add_subcommand("polar", "Polar coordinates with respect to a basis b1, b2");
    polar->require_subcommand(1);
    auto* encode = polar->add_subcommand("encode", "Vector to (rho, alpha)");
    encode->add_option("--weight", weight, "Weight spec")->required();
    encode->add_option("--b1", b1s, "Basis vector b1")->required();
    encode->add_option("--b2", b2s, "Basis vector b2")->required();
    encode->add_option("--v", vs, "Vector to encode")->required();
    auto* decode = polar->add_subcommand("decode", "(rho, alpha) to vector");
    decode->add_option("--weight", weight, "Weight spec")->required();
    decode->add_option("--b1", b1s, "Basis vector b1")->required();
    decode->add_option("--b2", b2s, "Basis vector b2")->required();
    decode->add_option("--rho", rho, "Radius, > 0")->required();
    decode->add_option("--alpha", alpha, "Angle in [-pi, pi]")->required();

    std::size_t n_hull = 1024;
    auto* convexify = app.add_subcommand("convexify", "CSV vertices of the convex hull of the unit ball");
    convexify->add_option("--weight", weight, "Weight spec")->required();
    convexify->add_option("--n", n_hull, "Sphere samples")->capture_default_str();

    CornerFlags corner_flags;
    std::size_t n_corner = 1024;
    auto* corner = app.add_subcommand("corner", "Verify a concave corner and derive a CSB witness");
    corner->add_option("--weight", weight, "Weight spec")->required();
    corner_flags.add(corner);
    corner->add_option("--n", n_corner, "Sphere samples for corner detection")->capture_default_str();

    std::size_t n_scan = 10000;
    auto* scan = app.add_subcommand("csb-scan", "Search for CSB violations");
    scan->add_option("--weight", weight, "Weight spec")->required();
    corner_flags.add(scan);
    scan->add_option("--n", n_scan, "Random samples")->capture_default_str();

    std::size_t n_lemmas = 10000;
    auto* lemmas = app.add_subcommand("prove-lemmas", "");
    lemmas->group("");
    lemmas->add_option("--n", n_lemmas, "Random samples")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (*angle) return cmd_angle(opt, weight, xs, ys, generalized, hull_n);
        if (*curve) return cmd_theta_curve(opt, weight, xs, ys, t_min, t_max, steps);
        if (*axioms) return cmd_axioms(opt, weight, n_axioms, generalized, hull_n);
        if (*sphere) return cmd_sphere(opt, weight, n_sphere);
        if (*encode) return cmd_polar_encode(opt, weight, b1s, b2s, vs);
        if (*decode) return cmd_polar_decode(opt, weight, b1s, b2s, rho, alpha);
        if (*convexify) return cmd_convexify(opt, weight, n_hull);
        if (*corner) return cmd_corner(opt, weight, corner_flags, n_corner);
        if (*scan) return cmd_csb_scan(opt, weight, corner_flags, n_scan);
        if (*lemmas) return cmd_prove_lemmas(opt, n_lemmas);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
