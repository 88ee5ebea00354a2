#include <cmath>
#include <vector>

#include "angspace/angle.hpp"
#include "angspace/axioms.hpp"
#include "angspace/corners.hpp"
#include "angspace/weights.hpp"
#include "helpers.hpp"

using namespace angspace;

namespace {

CornerSpec polygon_spec(double r) { return {{0, r}, {1, 0}, 1.0, 1 - 1 / r, 1 / r - 1}; }

}  // namespace

TEST_SUITE("corners") {

TEST_CASE("verify concave corner") {
    const CornerSpec half{{0, 0.5}, {1, 0}, 1.0, -1.0, 1.0};
    CHECK(verify_concave_corner(Weight::polygon(0.5), half));
    CHECK(corner_residual(Weight::polygon(0.5), half) <= 1e-12);
    for (double r : {0.1, 0.25, 0.5, 0.6, 0.75, 0.9, 0.99}) {
        INFO("r = ", r);
        CHECK(verify_concave_corner(Weight::polygon(r), polygon_spec(r)));
    }
    for (const CornerSpec& s : {CornerSpec{{0, 1}, {1, 0}, 1.0, -1.0, 1.0}, CornerSpec{{1, 0}, {0, 1}, 0.5, -0.5, 0.5},
                                CornerSpec{{1, 1}, {1, -1}, 0.2, 0.0, 0.1}})
        CHECK_FALSE(verify_concave_corner(Weight::holder(1), s));
    CHECK_CODE(verify_concave_corner(Weight::polygon(0.5), CornerSpec{{0, 0.5}, {1, 0}, 1.0, 1.0, -1.0}),
               ErrorCode::InvalidArgument);
    CHECK_CODE(verify_concave_corner(Weight::polygon(0.5), CornerSpec{{0, 0.5}, {1, 0}, 0.0, -1.0, 1.0}),
               ErrorCode::InvalidArgument);
    CHECK_CODE(verify_concave_corner(Weight::axis_seminorm(), CornerSpec{{0, 1}, {1, 0}, 1.0, -1.0, 1.0}),
               ErrorCode::ZeroSetVector);
}

TEST_CASE("corner points lie on the sphere segments") {
    const Weight w = Weight::polygon(0.5);
    const CornerPoints p = corner_points(w, polygon_spec(0.5), 0.1);
    CHECK(p.plus.x1 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(p.plus.x2 == doctest::Approx(0.55).epsilon(1e-15));
    CHECK(p.minus.x1 == doctest::Approx(-0.1).epsilon(1e-15));
    CHECK(p.minus.x2 == doctest::Approx(0.55).epsilon(1e-15));
}

TEST_CASE("quadratic expansion of the product") {
    const Weight w = Weight::polygon(0.5);
    const QuadraticP q = spade_quadratic_P(w, polygon_spec(0.5), 0.1);
    CHECK(q.K == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(q.closed == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(q.direct == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(spade_product(w, {0.1, 0.55}, {-0.1, 0.55}) == doctest::Approx(1.2).epsilon(1e-12));

    for (double r : {0.25, 0.5, 0.75}) {
        const QuadraticP q0 = spade_quadratic_P(Weight::polygon(r), polygon_spec(r), 0.0);
        CHECK(q0.direct == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(q0.closed == 1.0);
    }
    // r = 3/4: linear term 2 (1/r - 1) = 2/3.
    const double d = 1e-3;
    const QuadraticP q34 = spade_quadratic_P(Weight::polygon(0.75), polygon_spec(0.75), d);
    CHECK(q34.direct > 1.0);
    CHECK((q34.direct - 1.0) / d == doctest::Approx(2.0 / 3.0).epsilon(1e-2));

    // Not a corner of lp:3; the asymmetric slopes make the two forms disagree.
    CHECK_CODE(spade_quadratic_P(Weight::holder(3), CornerSpec{{0, 1}, {1, 0}, 1.0, -1.0, 0.5}, 0.5),
               ErrorCode::InternalInconsistency);
    CHECK_CODE(spade_quadratic_P(w, polygon_spec(0.5), 2.0), ErrorCode::InvalidArgument);
}

TEST_CASE("CSB witness") {
    const Weight w = Weight::polygon(0.5);
    const CsbWitness wit = csb_witness_from_corner(w, polygon_spec(0.5));
    CHECK(wit.u.x1 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(wit.u.x2 == doctest::Approx(0.55).epsilon(1e-14));
    CHECK(wit.v.x1 == doctest::Approx(-0.1).epsilon(1e-14));
    CHECK(wit.v.x2 == doctest::Approx(0.55).epsilon(1e-14));
    CHECK(std::fabs(wit.product - 1.2) <= 1e-9);
    CHECK(std::fabs(w.eval(wit.u) - 1) <= 1e-12);
    CHECK(std::fabs(w.eval(wit.v) - 1) <= 1e-12);
    // Segment (t, 1/2 + t/2) from (0, 1/2) to (1, 1) and its mirror.
    CHECK(std::fabs(wit.u.x2 - (0.5 + 0.5 * std::fabs(wit.u.x1))) < 1e-14);
    CHECK(std::fabs(wit.v.x2 - (0.5 + 0.5 * std::fabs(wit.v.x1))) < 1e-14);
    CHECK_FALSE(thy_angle(w, wit.u, wit.v).csb_ok());

    CHECK_CODE(csb_witness_from_corner(Weight::holder(1), CornerSpec{{0, 1}, {1, 0}, 1.0, -1.0, 1.0}),
               ErrorCode::NoViolationFound);
}

TEST_CASE("corner detection") {
    const auto found = find_concave_corners(Weight::polygon(0.5));
    REQUIRE(found.size() == 2);
    for (const CornerSpec& c : found) {
        CHECK(std::fabs(c.y_hat.x1) < 1e-15);
        CHECK(std::fabs(std::fabs(c.y_hat.x2) - 0.5) < 1e-15);
        CHECK(c.m_plus - c.m_minus == doctest::Approx(2.0));
        CHECK(verify_concave_corner(Weight::polygon(0.5), c));
    }
    for (double p : {1.0, 2.0, oracle::inf}) CHECK(find_concave_corners(Weight::holder(p)).empty());
    CHECK(find_concave_corners(Weight::polygon(2)).empty());
}

TEST_CASE("corner report") {
    const auto rep = corner_report(Weight::polygon(0.5), polygon_spec(0.5));
    CHECK(rep["csb_violated"] == true);
    CHECK(rep["heuristic"] == false);
    REQUIRE(rep["corners"].size() == 1);
    CHECK(rep["corners"][0]["verified"] == true);
    CHECK(rep["corners"][0]["witness"]["product"].get<double>() == doctest::Approx(1.2));
    const auto none = corner_report(Weight::holder(2), std::nullopt);
    CHECK(none["csb_violated"] == false);
    CHECK(none["corners"].empty());
    CHECK(none["heuristic"] == true);
}

TEST_CASE("property: closed form matches the direct product on verified corners") {
    for (double r : {0.2, 0.5, 0.8}) {
        const Weight w = Weight::polygon(r);
        const CornerSpec s = polygon_spec(r);
        REQUIRE(verify_concave_corner(w, s));
        for (int i = 0; i <= 100; ++i) {
            const double d = s.eps * i / 100.0;
            const QuadraticP q = spade_quadratic_P(w, s, d);
            CHECK(std::fabs(q.closed - q.direct) <= 1e-9 * q.closed);
            if (i > 0 && d <= 0.1) CHECK(q.direct > 1.0);
        }
    }
}

TEST_CASE("property: csb_scan finds a violation for every verified corner") {
    for (double r : {0.2, 0.5, 0.8}) {
        SampleOptions opt;
        opt.n = 200;
        const CsbScanResult res = csb_scan(Weight::polygon(r), opt, {polygon_spec(r)});
        CHECK(res.violation_count > 0);
        REQUIRE_FALSE(res.violations.empty());
        const CsbViolation& v = res.violations.front();
        CHECK(std::fabs(spade_product(Weight::polygon(r), v.x, v.y)) > v.bound * (1 + 1e-9));
    }
}

}  // TEST_SUITE
