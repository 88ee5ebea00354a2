// Exercises the shared library through its C header only.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "angspace/angspace.h"

extern "C" int angsp_c_smoke(void);

namespace {

constexpr double pi = 3.14159265358979323846;

struct W {
    angsp_weight* p = nullptr;
    explicit W(const char* spec) { REQUIRE(angsp_weight_parse(spec, &p) == ANGSP_OK); }
    ~W() { angsp_weight_free(p); }
};

nlohmann::json take_json(char* s) {
    REQUIRE(s != nullptr);
    nlohmann::json j = nlohmann::json::parse(s);
    angsp_string_free(s);
    return j;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("plain C client") { CHECK(angsp_c_smoke() == 0); }

TEST_CASE("status names and defaults") {
    CHECK(std::string(angsp_status_name(ANGSP_OK)) == "OK");
    CHECK(std::string(angsp_status_name(ANGSP_ZERO_SET_VECTOR)) == "ZeroSetVector");
    CHECK(std::string(angsp_status_name(ANGSP_BUFFER_TOO_SMALL)) == "BufferTooSmall");
    angsp_tolerances t{};
    angsp_default_tolerances(&t);
    CHECK(t.zero == 1e-12);
    CHECK(t.rel == 1e-9);
    CHECK(t.csb == 1e-9);
    CHECK(t.angle == 1e-10);
    CHECK(t.strict == 1e-12);
    CHECK(t.hull == 1e-3);
    CHECK(t.corner == 1e-9);
    CHECK(t.axiom_angle == 1e-6);
}

TEST_CASE("parse errors report a position") {
    angsp_weight* w = nullptr;
    CHECK(angsp_weight_parse("lp:abc", &w) == ANGSP_PARSE);
    CHECK(w == nullptr);
    CHECK(angsp_last_error_position() == 3);
    CHECK(std::string(angsp_last_error()).find("position 3") != std::string::npos);

    angsp_vec2 v{};
    CHECK(angsp_parse_vec2("1,0", &v) == ANGSP_OK);
    CHECK(angsp_last_error_position() == SIZE_MAX);
    CHECK(v.x1 == 1.0);
    CHECK(angsp_parse_vec2("1;0", &v) == ANGSP_PARSE);
    double r = 0;
    CHECK(angsp_parse_real("2.5", &r) == ANGSP_OK);
    CHECK(r == 2.5);
}

TEST_CASE("null arguments are rejected") {
    double out = 0;
    angsp_angle a{};
    CHECK(angsp_eval(nullptr, {1, 0}, &out) == ANGSP_INVALID_ARGUMENT);
    CHECK(angsp_thy_angle(nullptr, {1, 0}, {0, 1}, nullptr, &a) == ANGSP_INVALID_ARGUMENT);
    CHECK(angsp_weight_parse(nullptr, nullptr) == ANGSP_INVALID_ARGUMENT);
    W w("lp:1");
    CHECK(angsp_eval(w.p, {1, 0}, nullptr) == ANGSP_INVALID_ARGUMENT);
    angsp_weight_free(nullptr);
    angsp_hull_free(nullptr);
    angsp_string_free(nullptr);
}

TEST_CASE("angles") {
    W l1("lp:1");
    angsp_angle a{};
    REQUIRE(angsp_thy_angle(l1.p, {1, 0}, {0, 1}, nullptr, &a) == ANGSP_OK);
    CHECK(a.csb_ok == 1);
    CHECK(a.value == pi / 2);
    REQUIRE(angsp_thy_angle(l1.p, {1, 0}, {1, 1}, nullptr, &a) == ANGSP_OK);
    CHECK(std::fabs(a.value - std::acos(0.75)) < 1e-12);

    W poly("polygon:0.5");
    REQUIRE(angsp_thy_angle(poly.p, {0.1, 0.55}, {-0.1, 0.55}, nullptr, &a) == ANGSP_OK);
    CHECK(a.csb_ok == 0);
    CHECK(std::isnan(a.value));
    CHECK(a.product == doctest::Approx(1.2));
    REQUIRE(angsp_generalized_angle(poly.p, {1, 0}, {0, 1}, 0, nullptr, &a) == ANGSP_OK);
    CHECK(std::fabs(a.value - pi / 2) <= 1e-12);

    W axis("axis");
    CHECK(angsp_thy_angle(axis.p, {0, 1}, {1, 1}, nullptr, &a) == ANGSP_ZERO_SET_VECTOR);
    CHECK(angsp_generalized_angle(axis.p, {1, 0}, {1, 1}, 64, nullptr, &a) == ANGSP_NOT_NORMABLE);

    double e = 0;
    CHECK(angsp_euclid_angle({1, 0}, {0, 0}, &e) == ANGSP_ZERO_VECTOR);
    REQUIRE(angsp_euclid_angle({1, 0}, {1, 1}, &e) == ANGSP_OK);
    CHECK(e == doctest::Approx(pi / 4));

    double h = 0;
    W linf("lp:inf");
    REQUIRE(angsp_h_plus(linf.p, {1, 0}, {0, 1}, -0.5, nullptr, &h) == ANGSP_OK);
    CHECK(h == doctest::Approx(1.0));
    REQUIRE(angsp_h_minus(linf.p, {1, 0}, {0, 1}, 0.5, nullptr, &h) == ANGSP_OK);
    CHECK(h == doctest::Approx(1.0));
    REQUIRE(angsp_theta(l1.p, {1, 0}, {0, 1}, 1.0, nullptr, &a) == ANGSP_OK);
    CHECK(std::fabs(a.value - std::acos(0.75)) < 1e-12);
    double t = 0;
    REQUIRE(angsp_theta_inverse(l1.p, {1, 0}, {0, 1}, std::acos(0.75), nullptr, &t) == ANGSP_OK);
    CHECK(t == doctest::Approx(1.0).epsilon(1e-9));
    double sp = 0;
    REQUIRE(angsp_spade_product(l1.p, {1, 0}, {1, 1}, nullptr, &sp) == ANGSP_OK);
    CHECK(sp == doctest::Approx(1.5));
}

TEST_CASE("tolerance overrides are honoured") {
    W poly("polygon:0.5");
    angsp_tolerances t{};
    angsp_default_tolerances(&t);
    t.csb = 0.5;
    angsp_angle a{};
    REQUIRE(angsp_thy_angle(poly.p, {0.1, 0.55}, {-0.1, 0.55}, &t, &a) == ANGSP_OK);
    CHECK(a.csb_ok == 1);
    CHECK(a.value == 0.0);
}

TEST_CASE("weights") {
    W poly("polygon:0.5");
    CHECK(std::string(angsp_weight_name(poly.p)) == "polygon:0.5");
    int norm = 1, semi = 1;
    REQUIRE(angsp_weight_claims(poly.p, &norm, &semi) == ANGSP_OK);
    CHECK(norm == 0);
    double v = 0;
    REQUIRE(angsp_eval(poly.p, {0, 1}, &v) == ANGSP_OK);
    CHECK(v == doctest::Approx(2.0));
    angsp_vec2 s{};
    REQUIRE(angsp_sign(poly.p, {0, 1}, nullptr, &s) == ANGSP_OK);
    CHECK(s.x2 == doctest::Approx(0.5));
    int z = 0;
    W axis("axis");
    REQUIRE(angsp_in_zero_set(axis.p, {0, 3}, nullptr, &z) == ANGSP_OK);
    CHECK(z == 1);
    CHECK(angsp_sign(axis.p, {0, 1}, nullptr, &s) == ANGSP_ZERO_SET_VECTOR);
    int ok = 0;
    REQUIRE(angsp_validate_homogeneity(poly.p, 1, 100, nullptr, &ok) == ANGSP_OK);
    CHECK(ok == 1);

    const angsp_vec2 sq[] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    angsp_weight* cw = nullptr;
    REQUIRE(angsp_weight_from_sphere(sq, 4, "square", &cw) == ANGSP_OK);
    REQUIRE(angsp_eval(cw, {0.5, -3}, &v) == ANGSP_OK);
    CHECK(v == doctest::Approx(3.0));
    angsp_weight_free(cw);
    const angsp_vec2 bow[] = {{1, 1}, {-1, -1}, {-1, 1}, {1, -1}};
    CHECK(angsp_weight_from_sphere(bow, 4, nullptr, &cw) == ANGSP_NOT_STAR_SHAPED);
}

TEST_CASE("polar") {
    W l1("lp:1");
    angsp_polar p{};
    REQUIRE(angsp_polar_encode(l1.p, {1, 0}, {0, 1}, {1, 1}, nullptr, &p) == ANGSP_OK);
    CHECK(p.rho == 2.0);
    CHECK(std::fabs(p.alpha - std::acos(0.75)) < 1e-12);
    angsp_vec2 v{};
    REQUIRE(angsp_polar_decode(l1.p, {1, 0}, {0, 1}, p, nullptr, &v) == ANGSP_OK);
    CHECK(v.x1 == doctest::Approx(1.0));
    CHECK(v.x2 == doctest::Approx(1.0));
    CHECK(angsp_polar_decode(l1.p, {1, 0}, {0, 1}, {-1, 0}, nullptr, &v) == ANGSP_INVALID_ARGUMENT);
}

TEST_CASE("sphere and hull buffers") {
    W poly("polygon:0.5");
    std::size_t count = 0;
    CHECK(angsp_sphere_points(poly.p, 6, nullptr, nullptr, 0, &count) == ANGSP_BUFFER_TOO_SMALL);
    CHECK(count == 6);
    std::vector<angsp_vec2> buf(count);
    REQUIRE(angsp_sphere_points(poly.p, 6, nullptr, buf.data(), buf.size(), &count) == ANGSP_OK);

    angsp_hull* h = nullptr;
    REQUIRE(angsp_hull_build(poly.p, 0, nullptr, &h) == ANGSP_OK);
    CHECK(angsp_hull_vertices(h, nullptr, 0, &count) == ANGSP_BUFFER_TOO_SMALL);
    CHECK(count == 4);
    std::vector<angsp_vec2> hv(count);
    REQUIRE(angsp_hull_vertices(h, hv.data(), hv.size(), &count) == ANGSP_OK);
    for (const auto& p : hv) {
        CHECK(std::fabs(p.x1) == 1.0);
        CHECK(std::fabs(p.x2) == 1.0);
    }
    int normable = 0;
    REQUIRE(angsp_hull_is_normable(h, &normable) == ANGSP_OK);
    CHECK(normable == 1);
    double g = 0;
    REQUIRE(angsp_hull_gauge(h, {2, 1}, &g) == ANGSP_OK);
    CHECK(g == 2.0);
    std::size_t unb = 9;
    REQUIRE(angsp_hull_unbounded_count(h, &unb) == ANGSP_OK);
    CHECK(unb == 0);
    angsp_hull_free(h);

    W axis("axis");
    REQUIRE(angsp_hull_build(axis.p, 64, nullptr, &h) == ANGSP_OK);
    REQUIRE(angsp_hull_unbounded_count(h, &unb) == ANGSP_OK);
    CHECK(unb == 2);
    REQUIRE(angsp_hull_is_normable(h, &normable) == ANGSP_OK);
    CHECK(normable == 0);
    angsp_hull_free(h);
}

TEST_CASE("corners") {
    W poly("polygon:0.5");
    const angsp_corner_spec spec{{0, 0.5}, {1, 0}, 1.0, -1.0, 1.0};
    int ok = 0;
    double res = 1;
    REQUIRE(angsp_verify_corner(poly.p, &spec, 101, nullptr, &ok, &res) == ANGSP_OK);
    CHECK(ok == 1);
    CHECK(res < 1e-12);
    angsp_vec2 u{}, v{};
    double prod = 0;
    REQUIRE(angsp_csb_witness(poly.p, &spec, nullptr, &u, &v, &prod) == ANGSP_OK);
    CHECK(std::fabs(prod - 1.2) <= 1e-9);
    W l1("lp:1");
    CHECK(angsp_csb_witness(l1.p, &spec, nullptr, &u, &v, &prod) == ANGSP_NO_VIOLATION_FOUND);
}

TEST_CASE("JSON reports") {
    W l1("lp:1");
    char* s = nullptr;
    REQUIRE(angsp_axioms_json(l1.p, 0, 1, 500, 0, 6, nullptr, &s) == ANGSP_OK);
    const auto ax = take_json(s);
    CHECK(ax["axioms"].size() == 11);
    CHECK(ax["axioms"][7]["status"] == "fail");

    W axis("axis");
    int pass = 1;
    REQUIRE(angsp_an11_json(axis.p, {1, 0}, {1, 1}, 0, nullptr, &s, &pass) == ANGSP_OK);
    take_json(s);
    CHECK(pass == 0);
    CHECK(angsp_axioms_json(axis.p, 1, 1, 100, 64, 6, nullptr, &s) == ANGSP_NOT_NORMABLE);

    W poly("polygon:0.5");
    std::size_t violations = 0;
    REQUIRE(angsp_csb_scan_json(poly.p, 1, 200, nullptr, 0, 6, nullptr, &s, &violations) == ANGSP_OK);
    CHECK(take_json(s)["violation_count"].get<std::size_t>() == violations);
    CHECK(violations > 0);

    int violated = 0;
    REQUIRE(angsp_corner_json(poly.p, nullptr, 0, 6, nullptr, &s, &violated) == ANGSP_OK);
    CHECK(take_json(s)["corners"].size() == 2);
    CHECK(violated == 1);

    REQUIRE(angsp_prove_lemmas_json(1, 500, 6, &s, &pass) == ANGSP_OK);
    take_json(s);
    CHECK(pass == 1);
    CHECK(angsp_prove_lemmas_json(1, 500, -1, &s, &pass) == ANGSP_INVALID_ARGUMENT);
}

TEST_CASE("precision rounds reals only") {
    W l1("lp:1");
    char* s = nullptr;
    const angsp_corner_spec spec{{0, 1}, {1, 0}, 1.0, -1.0, 1.0};
    REQUIRE(angsp_corner_json(l1.p, &spec, 0, 3, nullptr, &s, nullptr) == ANGSP_OK);
    const auto j = take_json(s);
    const double r = j["corners"][0]["residual"].get<double>();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", r);
    CHECK(r == std::strtod(buf, nullptr));
}

}  // TEST_SUITE
