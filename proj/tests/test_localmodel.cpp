#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singpack/localmodel.hpp"
#include "singpack/verify.hpp"

#include <cmath>

using namespace singpack;

namespace {

const DiscBundleChart kChart{1.0 / 3.0, 0.5, 3.0, 0.1};  // A - delta = 2.9

} // namespace

TEST_CASE("forms at a reference point") {
    ChartPoint p{0.5, 0.0, 0.5, 0.0};
    auto f = forms_at(kChart, p);
    CHECK(f.omega[0][1] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(f.omega[1][0] == doctest::Approx(-0.75).epsilon(1e-15));
    CHECK(f.omega[2][3] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(f.omega[2][1] == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(f.omega[0][2] == 0.0);

    CHECK(f.lambda[1] == doctest::Approx(-0.375).epsilon(1e-15));
    CHECK(f.lambda[3] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(f.lambda[0] == 0.0);
    CHECK(f.lambda[2] == 0.0);

    CHECK(f.alpha[1] == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(f.alpha[3] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("forms domain checks") {
    CHECK_THROWS_AS(forms_at(kChart, ChartPoint{0.1, 0.0, 1.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(forms_at(kChart, ChartPoint{-0.1, 0.0, 0.5, 0.0}),
                    std::domain_error);
    DiscBundleChart steep{1.0, 2.0, 1.0, 0.0};  // gamma R hits 1 inside
    CHECK_THROWS_AS(forms_at(steep, ChartPoint{0.1, 0.0, 0.6, 0.0}),
                    std::domain_error);
    DiscBundleChart bad{-1.0, 0.0, 1.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("liouville velocity") {
    DiscBundleChart c{1.0, -1.0, 1.0, 0.0};
    auto v = liouville_field(c, ChartPoint{1.0, 0.0, 0.5, 0.0});
    CHECK(v[0] == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
    CHECK(v[1] == 0.0);
    CHECK(v[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v[3] == 0.0);
}

TEST_CASE("liouville field contracts omega to lambda") {
    for (double gamma : {-1.0, 0.0, 0.5}) {
        DiscBundleChart c{1.0 / 3.0, gamma, 2.0, 0.0};
        CHECK(max_liouville_defect(c, 200, 42) < 1e-12);
    }
}

TEST_CASE("lambda is a primitive of -omega") {
    for (double gamma : {-1.0, 0.0, 0.5}) {
        DiscBundleChart c{2.0, gamma, 2.0, 0.0};
        CHECK(max_exactness_defect(c, 100, 7, 1e-5) < 1e-7);
    }
}

TEST_CASE("phi at the reference point") {
    auto y = phi_map(kChart, ChartPoint{0.5, 0.25, 0.5, 0.75});
    CHECK(y.P == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(y.R == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(y.zeta == 0.25);
    CHECK(y.theta == 0.75);
}

TEST_CASE("phi pulls the standard form back to omega") {
    // phi is bilinear in the coordinates, so central differences are exact up
    // to rounding; the defect sits at machine scale, not O(h^2).
    for (double gamma : {-1.0, 0.0, 0.5}) {
        DiscBundleChart c{1.0 / 3.0, gamma, 2.0, 0.0};
        CHECK(max_pullback_defect_grid(c, 4, 1e-4) < 1e-9);
    }
    ChartPoint p{0.5, 0.0, 0.5, 0.0};
    CHECK(pullback_defect(kChart, p, 1e-4) < 1e-10);
    CHECK_THROWS_AS(pullback_defect(kChart, ChartPoint{0.5, 0.0, 0.9999, 0.0}, 1e-3),
                    std::domain_error);
}

TEST_CASE("closed-form flow at t = ln 2") {
    DiscBundleChart c{1.0, 0.0, 2.0, 0.0};
    auto y = flow_closed_form(c, ImagePoint{1.0, 0.0, 0.5, 0.0}, std::log(2.0));
    CHECK(y.P == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(y.R == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("flow fixed point and semigroup property") {
    auto y = flow_closed_form(kChart, ImagePoint{0.0, 0.1, kChart.a, 0.2}, 5.0);
    CHECK(y.P == 0.0);
    CHECK(y.R == doctest::Approx(kChart.a).epsilon(1e-15));

    ImagePoint p{1.3, 0.0, 0.05, 0.0};
    auto one = flow_closed_form(kChart, p, 0.7 + 0.4);
    auto two = flow_closed_form(kChart, flow_closed_form(kChart, p, 0.7), 0.4);
    CHECK(one.P == doctest::Approx(two.P).epsilon(1e-12));
    CHECK(one.R == doctest::Approx(two.R).epsilon(1e-12));
}

TEST_CASE("closed-form flow matches RK4") {
    CHECK(max_flow_vs_rk4(kChart, 50, 11, 3.0, 1e-3) < 1e-9);
}

TEST_CASE("basin membership by both routes") {
    auto in = basin_membership(kChart, ImagePoint{1.0, 0.0, 0.1, 0.0});
    CHECK(in.inside);
    CHECK(in.analytic_inside);
    CHECK(in.dynamic_inside);
    CHECK(!in.boundary_flag);

    auto out = basin_membership(kChart, ImagePoint{2.8, 0.0, 0.2, 0.0});
    CHECK(!out.inside);
    CHECK(!out.analytic_inside);
    CHECK(!out.dynamic_inside);

    auto edge = basin_membership(kChart, ImagePoint{0.1, 0.0, 0.4, 0.0});
    CHECK(edge.boundary_flag);
    CHECK(!edge.dynamic_inside);
    CHECK(!edge.analytic_inside);
}

TEST_CASE("basin routes agree away from the boundary") {
    CHECK(basin_agreement_fraction(kChart, 5000, 23, 1e-9) == 1.0);
    DiscBundleChart flat{0.5, 0.0, 1.0, 0.0};
    CHECK(basin_agreement_fraction(flat, 5000, 24, 1e-9) == 1.0);
}

TEST_CASE("basin refuses the hyperboloid regime") {
    DiscBundleChart c{1.0, -0.5, 1.0, 0.0};
    CHECK_THROWS_AS(basin_membership(c, ImagePoint{0.1, 0.0, 0.1, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(basin_membership(kChart, ImagePoint{-0.1, 0.0, 0.1, 0.0}),
                    std::domain_error);
}

TEST_CASE("monte carlo basin volume") {
    // converges to (A - delta) a / 2
    double v = monte_carlo_basin_volume(kChart, 200000, 0);
    CHECK(v == doctest::Approx(2.9 / 6.0).epsilon(0.015));

    DiscBundleChart flat{0.5, 0.0, 2.0, 0.0};
    double w = monte_carlo_basin_volume(flat, 200000, 1);
    CHECK(w == doctest::Approx(0.5).epsilon(0.015));
}
