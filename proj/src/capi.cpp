#include "angspace/angspace.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "angspace/angle.hpp"
#include "angspace/axioms.hpp"
#include "angspace/convexify.hpp"
#include "angspace/corners.hpp"
#include "angspace/errors.hpp"
#include "angspace/plane_geometry.hpp"
#include "angspace/polar.hpp"
#include "angspace/weight_spec.hpp"
#include "angspace/weights.hpp"

struct angsp_weight {
    angspace::Weight w;
};

struct angsp_hull {
    angspace::HullPolygon h;
};

namespace {

using namespace angspace;

thread_local std::string last_message;
thread_local std::size_t last_position = std::numeric_limits<std::size_t>::max();

void set_error(const char* what, std::size_t pos = std::numeric_limits<std::size_t>::max()) {
    last_message = what;
    last_position = pos;
}

angsp_status map(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return ANGSP_INVALID_ARGUMENT;
        case ErrorCode::Parse: return ANGSP_PARSE;
        case ErrorCode::ZeroSetVector: return ANGSP_ZERO_SET_VECTOR;
        case ErrorCode::ZeroVector: return ANGSP_ZERO_VECTOR;
        case ErrorCode::NotBracketed: return ANGSP_NOT_BRACKETED;
        case ErrorCode::MonotonicityViolated: return ANGSP_MONOTONICITY_VIOLATED;
        case ErrorCode::NotNormable: return ANGSP_NOT_NORMABLE;
        case ErrorCode::DegenerateInput: return ANGSP_DEGENERATE_INPUT;
        case ErrorCode::UnboundedDirection: return ANGSP_UNBOUNDED_DIRECTION;
        case ErrorCode::InternalInconsistency: return ANGSP_INTERNAL_INCONSISTENCY;
        case ErrorCode::NoViolationFound: return ANGSP_NO_VIOLATION_FOUND;
        case ErrorCode::NotStarShaped: return ANGSP_NOT_STAR_SHAPED;
        case ErrorCode::Io: return ANGSP_IO;
    }
    return ANGSP_UNKNOWN;
}

struct BadArgument {
    const char* what;
};

template <class F>
angsp_status guard(F&& f) noexcept {
    try {
        f();
        set_error("");
        return ANGSP_OK;
    } catch (const BadArgument& e) {
        set_error(e.what);
        return ANGSP_INVALID_ARGUMENT;
    } catch (const ParseError& e) {
        set_error(e.what(), e.position());
        return ANGSP_PARSE;
    } catch (const Error& e) {
        set_error(e.what());
        return map(e.code());
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return ANGSP_UNKNOWN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ANGSP_UNKNOWN;
    } catch (...) {
        set_error("unknown exception");
        return ANGSP_UNKNOWN;
    }
}

template <class... P>
void require(const P*... ptrs) {
    if (((ptrs == nullptr) || ...)) throw BadArgument{"null pointer argument"};
}

Vec2 vec(angsp_vec2 v) { return {v.x1, v.x2}; }
angsp_vec2 cvec(const Vec2& v) { return {v.x1, v.x2}; }

Tolerances tols(const angsp_tolerances* t) {
    if (!t) return default_tolerances();
    return {t->zero, t->rel, t->csb, t->angle, t->strict, t->hull, t->corner, t->axiom_angle};
}

angsp_angle cangle(const AngleResult& r) {
    return {r.value ? *r.value : std::numeric_limits<double>::quiet_NaN(), r.csb_ok() ? 1 : 0, r.product, r.bound,
            r.ratio};
}

CornerSpec corner(const angsp_corner_spec& s) { return {vec(s.y_hat), vec(s.x_bar), s.eps, s.m_minus, s.m_plus}; }

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

void round_floats(nlohmann::json& j, int digits) {
    if (j.is_number_float()) {
        j = round_sig(j.get<double>(), digits);
    } else if (j.is_structured()) {
        for (auto& child : j) round_floats(child, digits);
    }
}

char* dup_json(nlohmann::json j, int precision) {
    if (precision < 0) throw BadArgument{"precision must be >= 0"};
    if (precision > 0) round_floats(j, precision);
    const std::string s = j.dump();
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

angsp_status copy_out(const std::vector<Vec2>& pts, angsp_vec2* buf, std::size_t capacity, std::size_t* count) {
    *count = pts.size();
    if (capacity < pts.size()) {
        set_error("buffer too small");
        return ANGSP_BUFFER_TOO_SMALL;
    }
    if (!pts.empty() && !buf) {
        set_error("null buffer");
        return ANGSP_INVALID_ARGUMENT;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) buf[i] = cvec(pts[i]);
    return ANGSP_OK;
}

}  // namespace

extern "C" {

const char* angsp_status_name(angsp_status status) {
    switch (status) {
        case ANGSP_OK: return "OK";
        case ANGSP_INVALID_ARGUMENT: return "InvalidArgument";
        case ANGSP_PARSE: return "Parse";
        case ANGSP_ZERO_SET_VECTOR: return "ZeroSetVector";
        case ANGSP_ZERO_VECTOR: return "ZeroVector";
        case ANGSP_NOT_BRACKETED: return "NotBracketed";
        case ANGSP_MONOTONICITY_VIOLATED: return "MonotonicityViolated";
        case ANGSP_NOT_NORMABLE: return "NotNormable";
        case ANGSP_DEGENERATE_INPUT: return "DegenerateInput";
        case ANGSP_UNBOUNDED_DIRECTION: return "UnboundedDirection";
        case ANGSP_INTERNAL_INCONSISTENCY: return "InternalInconsistency";
        case ANGSP_NO_VIOLATION_FOUND: return "NoViolationFound";
        case ANGSP_NOT_STAR_SHAPED: return "NotStarShaped";
        case ANGSP_IO: return "Io";
        case ANGSP_BUFFER_TOO_SMALL: return "BufferTooSmall";
        case ANGSP_UNKNOWN: return "Unknown";
    }
    return "Unknown";
}

const char* angsp_last_error(void) { return last_message.c_str(); }

size_t angsp_last_error_position(void) { return last_position; }

void angsp_default_tolerances(angsp_tolerances* out) {
    if (!out) return;
    const Tolerances& t = default_tolerances();
    *out = {t.zero, t.rel, t.csb, t.angle, t.strict, t.hull, t.corner, t.axiom_angle};
}

void angsp_string_free(char* s) { std::free(s); }

angsp_status angsp_parse_vec2(const char* text, angsp_vec2* out) {
    return guard([&] {
        require(text, out);
        *out = cvec(parse_vec2(text));
    });
}

angsp_status angsp_parse_real(const char* text, double* out) {
    return guard([&] {
        require(text, out);
        *out = parse_real(text);
    });
}

angsp_status angsp_weight_parse(const char* spec, angsp_weight** out) {
    return guard([&] {
        require(spec, out);
        *out = new angsp_weight{parse_weight(spec)};
    });
}

angsp_status angsp_weight_from_sphere(const angsp_vec2* points, size_t count, const char* name, angsp_weight** out) {
    return guard([&] {
        require(points, out);
        std::vector<Vec2> pts;
        pts.reserve(count);
        for (size_t i = 0; i < count; ++i) pts.push_back(vec(points[i]));
        *out = new angsp_weight{Weight::custom_sphere(pts, name ? name : "sphere")};
    });
}

void angsp_weight_free(angsp_weight* w) { delete w; }

const char* angsp_weight_name(const angsp_weight* w) { return w ? w->w.name().c_str() : ""; }

angsp_status angsp_weight_claims(const angsp_weight* w, int* is_norm, int* is_seminorm) {
    return guard([&] {
        require(w, is_norm, is_seminorm);
        *is_norm = w->w.claims().is_norm;
        *is_seminorm = w->w.claims().is_seminorm;
    });
}

angsp_status angsp_eval(const angsp_weight* w, angsp_vec2 v, double* out) {
    return guard([&] {
        require(w, out);
        if (!is_finite(vec(v))) throw BadArgument{"vector must be finite"};
        *out = w->w.eval(vec(v));
    });
}

angsp_status angsp_in_zero_set(const angsp_weight* w, angsp_vec2 v, const angsp_tolerances* tol, int* out) {
    return guard([&] {
        require(w, out);
        *out = in_zero_set(w->w, vec(v), tols(tol));
    });
}

angsp_status angsp_sign(const angsp_weight* w, angsp_vec2 v, const angsp_tolerances* tol, angsp_vec2* out) {
    return guard([&] {
        require(w, out);
        *out = cvec(sign(w->w, vec(v), tols(tol)));
    });
}

angsp_status angsp_validate_homogeneity(const angsp_weight* w, uint64_t seed, size_t n, const angsp_tolerances* tol,
                                        int* ok) {
    return guard([&] {
        require(w, ok);
        *ok = !validate_homogeneity(w->w, seed, n, tols(tol)).has_value();
    });
}

angsp_status angsp_spade_product(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, const angsp_tolerances* tol,
                                 double* out) {
    return guard([&] {
        require(w, out);
        *out = spade_product(w->w, vec(x), vec(y), tols(tol));
    });
}

angsp_status angsp_thy_angle(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, const angsp_tolerances* tol,
                             angsp_angle* out) {
    return guard([&] {
        require(w, out);
        *out = cangle(thy_angle(w->w, vec(x), vec(y), tols(tol)));
    });
}

angsp_status angsp_generalized_angle(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, size_t hull_n,
                                     const angsp_tolerances* tol, angsp_angle* out) {
    return guard([&] {
        require(w, out);
        const std::size_t n = hull_n == 0 ? default_sphere_samples : hull_n;
        *out = cangle(generalized_thy_angle(w->w, vec(x), vec(y), n, tols(tol)));
    });
}

angsp_status angsp_euclid_angle(angsp_vec2 x, angsp_vec2 y, double* out) {
    return guard([&] {
        require(out);
        *out = euclid_angle(vec(x), vec(y));
    });
}

angsp_status angsp_h_plus(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double t, const angsp_tolerances* tol,
                          double* out) {
    return guard([&] {
        require(w, out);
        *out = h_plus(w->w, vec(x), vec(y), t, tols(tol));
    });
}

angsp_status angsp_h_minus(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double t, const angsp_tolerances* tol,
                           double* out) {
    return guard([&] {
        require(w, out);
        *out = h_minus(w->w, vec(x), vec(y), t, tols(tol));
    });
}

angsp_status angsp_theta(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double t, const angsp_tolerances* tol,
                         angsp_angle* out) {
    return guard([&] {
        require(w, out);
        *out = cangle(theta(w->w, vec(x), vec(y), t, tols(tol)));
    });
}

angsp_status angsp_theta_inverse(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double alpha,
                                 const angsp_tolerances* tol, double* t) {
    return guard([&] {
        require(w, t);
        *t = theta_inverse(w->w, vec(x), vec(y), alpha, tols(tol));
    });
}

angsp_status angsp_polar_encode(const angsp_weight* w, angsp_vec2 b1, angsp_vec2 b2, angsp_vec2 v,
                                const angsp_tolerances* tol, angsp_polar* out) {
    return guard([&] {
        require(w, out);
        const PolarCoord p = polar_encode(w->w, vec(b1), vec(b2), vec(v), tols(tol));
        *out = {p.rho, p.alpha};
    });
}

angsp_status angsp_polar_decode(const angsp_weight* w, angsp_vec2 b1, angsp_vec2 b2, angsp_polar p,
                                const angsp_tolerances* tol, angsp_vec2* out) {
    return guard([&] {
        require(w, out);
        *out = cvec(polar_decode(w->w, vec(b1), vec(b2), PolarCoord{p.rho, p.alpha}, tols(tol)));
    });
}

angsp_status angsp_sphere_points(const angsp_weight* w, size_t n, const angsp_tolerances* tol, angsp_vec2* buf,
                                 size_t capacity, size_t* count) {
    std::vector<Vec2> pts;
    const angsp_status st = guard([&] {
        require(w, count);
        pts = sphere_polyline(w->w, n, tols(tol));
    });
    return st == ANGSP_OK ? copy_out(pts, buf, capacity, count) : st;
}

angsp_status angsp_hull_build(const angsp_weight* w, size_t n, const angsp_tolerances* tol, angsp_hull** out) {
    return guard([&] {
        require(w, out);
        *out = new angsp_hull{weight_hull(w->w, n == 0 ? default_sphere_samples : n, tols(tol))};
    });
}

void angsp_hull_free(angsp_hull* h) { delete h; }

angsp_status angsp_hull_vertices(const angsp_hull* h, angsp_vec2* buf, size_t capacity, size_t* count) {
    if (!h || !count) {
        set_error("null pointer argument");
        return ANGSP_INVALID_ARGUMENT;
    }
    return copy_out(h->h.vertices, buf, capacity, count);
}

angsp_status angsp_hull_unbounded_count(const angsp_hull* h, size_t* count) {
    return guard([&] {
        require(h, count);
        *count = h->h.unbounded_dirs.size();
    });
}

angsp_status angsp_hull_is_normable(const angsp_hull* h, int* out) {
    return guard([&] {
        require(h, out);
        *out = is_normable(h->h);
    });
}

angsp_status angsp_hull_gauge(const angsp_hull* h, angsp_vec2 v, double* out) {
    return guard([&] {
        require(h, out);
        *out = minkowski_functional(h->h, vec(v));
    });
}

angsp_status angsp_verify_corner(const angsp_weight* w, const angsp_corner_spec* spec, size_t grid_n,
                                 const angsp_tolerances* tol, int* ok, double* residual) {
    return guard([&] {
        require(w, spec, ok);
        const Tolerances t = tols(tol);
        const double r = corner_residual(w->w, corner(*spec), grid_n, t);
        *ok = r <= t.corner;
        if (residual) *residual = r;
    });
}

angsp_status angsp_csb_witness(const angsp_weight* w, const angsp_corner_spec* spec, const angsp_tolerances* tol,
                               angsp_vec2* u, angsp_vec2* v, double* product) {
    return guard([&] {
        require(w, spec, u, v, product);
        const CsbWitness wit = csb_witness_from_corner(w->w, corner(*spec), tols(tol));
        *u = cvec(wit.u);
        *v = cvec(wit.v);
        *product = wit.product;
    });
}

angsp_status angsp_axioms_json(const angsp_weight* w, int generalized, uint64_t seed, size_t n, size_t hull_n,
                               int precision, const angsp_tolerances* tol, char** out) {
    return guard([&] {
        require(w, out);
        const Tolerances t = tols(tol);
        const AngleFunction angle = generalized
                                        ? generalized_angle_function(w->w, hull_n == 0 ? default_sphere_samples : hull_n, t)
                                        : thy_angle_function(w->w, t);
        SampleOptions opt;
        opt.seed = seed;
        opt.n = n;
        *out = dup_json(check_all(w->w, angle, opt, 20, t).to_json(), precision);
    });
}

angsp_status angsp_an11_json(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, int precision,
                             const angsp_tolerances* tol, char** out, int* pass) {
    return guard([&] {
        require(w, out);
        const An11Result r = check_an11(w->w, vec(x), vec(y), standard_theta_grid(), tols(tol));
        if (pass) *pass = r.status == AxiomStatus::Pass;
        *out = dup_json(r.to_json(vec(x), vec(y)), precision);
    });
}

angsp_status angsp_csb_scan_json(const angsp_weight* w, uint64_t seed, size_t n, const angsp_corner_spec* corners,
                                 size_t corner_count, int precision, const angsp_tolerances* tol, char** out,
                                 size_t* violations) {
    return guard([&] {
        require(w, out);
        if (corner_count > 0 && !corners) throw BadArgument{"null corner list"};
        std::vector<CornerSpec> specs;
        for (size_t i = 0; i < corner_count; ++i) specs.push_back(corner(corners[i]));
        SampleOptions opt;
        opt.seed = seed;
        opt.n = n;
        const CsbScanResult r = csb_scan(w->w, opt, specs, 100, tols(tol));
        if (violations) *violations = r.violation_count;
        *out = dup_json(r.to_json(w->w.name(), seed), precision);
    });
}

angsp_status angsp_corner_json(const angsp_weight* w, const angsp_corner_spec* spec, size_t n, int precision,
                               const angsp_tolerances* tol, char** out, int* csb_violated) {
    return guard([&] {
        require(w, out);
        std::optional<CornerSpec> s;
        if (spec) s = corner(*spec);
        nlohmann::json j = corner_report(w->w, s, n == 0 ? 1024 : n, tols(tol));
        if (csb_violated) *csb_violated = j["csb_violated"].get<bool>();
        *out = dup_json(std::move(j), precision);
    });
}

angsp_status angsp_prove_lemmas_json(uint64_t seed, size_t n, int precision, char** out, int* pass) {
    return guard([&] {
        require(out);
        nlohmann::json j = prove_lemmas(seed, n);
        if (pass) *pass = j["pass"].get<bool>();
        *out = dup_json(std::move(j), precision);
    });
}

}  // extern "C"
