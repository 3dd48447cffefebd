#include "lagmult/lagmult.h"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

TEST_CASE("scalar entry points") {
    double v = 0.0;
    CHECK(lgm_log_gamma(11.0, &v) == LGM_OK);
    CHECK(v == doctest::Approx(15.1044125731).epsilon(1e-10));
    CHECK(lgm_log_gamma(-1.0, &v) == LGM_EDOMAIN);
    CHECK(std::strlen(lgm_last_error()) > 0);
    CHECK(lgm_binom_A(2, -0.5) == doctest::Approx(0.375));
    double ls[3];
    CHECK(lgm_laguerre(0.0, 2, 2.0, ls) == LGM_OK);
    CHECK(ls[2] == doctest::Approx(-1.0));
    CHECK(lgm_laguerre(-2.0, 2, 2.0, ls) == LGM_EINVAL);
    CHECK(lgm_script_L(1, 0.0, 2.0, &v) == LGM_OK);
    CHECK(v == doctest::Approx(-0.3678794412));
    CHECK(lgm_script_L(1, 0.0, 0.0, &v) == LGM_EDOMAIN);
    CHECK(std::string(lgm_version()).size() > 0);
}

TEST_CASE("quadrature handle") {
    lgm_quadrule* q = nullptr;
    REQUIRE(lgm_quadrule_create(2, 0.0, &q) == LGM_OK);
    CHECK(lgm_quadrule_size(q) == 2);
    CHECK(lgm_quadrule_nodes(q)[0] == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-14));
    CHECK(lgm_quadrule_weights(q)[1] == doctest::Approx((2 - std::sqrt(2.0)) / 4).epsilon(1e-14));
    CHECK(std::exp(lgm_quadrule_log_weights(q)[0]) == doctest::Approx((2 + std::sqrt(2.0)) / 4));
    lgm_quadrule_destroy(q);
    CHECK(lgm_quadrule_create(0, 0.0, &q) == LGM_EINVAL);
    lgm_quadrule_destroy(nullptr);
}

TEST_CASE("reports through the handle") {
    lgm_params p;
    lgm_params_default(&p);
    p.alpha = 0.5;
    const double c[] = {0.0, 0.0, 1.0};
    p.coeffs = c;
    p.n_coeffs = 3;
    p.n_max = 3;
    lgm_report* r = nullptr;
    REQUIRE(lgm_run("coeffs", &p, &r) == LGM_OK);
    CHECK(std::string(lgm_report_theorem(r)) == "coeffs");
    CHECK(lgm_report_rows(r) == 4);
    CHECK(lgm_report_columns(r) == 2);
    CHECK(std::string(lgm_report_column_name(r, 1)) == "fhat");
    CHECK(lgm_report_column_name(r, 9) == nullptr);
    double v = 0.0;
    CHECK(lgm_report_value(r, 2, 1, &v) == LGM_OK);
    CHECK(v == doctest::Approx(0.8862269255));
    CHECK(lgm_report_value(r, 99, 0, &v) == LGM_EINVAL);
    CHECK(lgm_report_verdict(r) == LGM_CONSISTENT);
    lgm_report_destroy(r);
}

TEST_CASE("fit and notes") {
    lgm_params p;
    lgm_params_default(&p);
    const double xs[] = {32, 64, 128, 256}, ys[] = {3 * 32.0 * 32, 3 * 64.0 * 64, 3 * 128.0 * 128, 3 * 256.0 * 256};
    p.xs = xs;
    p.ys = ys;
    p.n_points = 4;
    lgm_report* r = nullptr;
    REQUIRE(lgm_run("fit", &p, &r) == LGM_OK);
    REQUIRE(lgm_report_fit_count(r) == 1);
    const char* name = nullptr;
    double slope = 0, icpt = 0, res = 0;
    CHECK(lgm_report_fit(r, 0, &name, &slope, &icpt, &res) == LGM_OK);
    CHECK(std::string(name) == "fit");
    CHECK(slope == doctest::Approx(2.0));
    CHECK(icpt == doctest::Approx(std::log(3.0)));
    CHECK(lgm_report_fit(r, 1, &name, &slope, &icpt, &res) == LGM_EINVAL);
    double note = 0;
    CHECK(lgm_report_note(r, "missing", &note) == LGM_EINVAL);
    lgm_report_destroy(r);
}

TEST_CASE("status codes for bad requests") {
    lgm_params p;
    lgm_params_default(&p);
    lgm_report* r = nullptr;
    CHECK(lgm_run("no-such-command", &p, &r) == LGM_EINVAL);
    CHECK(r == nullptr);
    CHECK(lgm_run("thm11", nullptr, &r) == LGM_EINVAL);
    p.gamma = -2.0;
    CHECK(lgm_run("thm11", &p, &r) == LGM_EINVAL);
    lgm_params_default(&p);
    p.family = "bogus";
    CHECK(lgm_run("mult-lower", &p, &r) == LGM_EINVAL);
    CHECK(std::string(lgm_last_error()).find("bogus") != std::string::npos);
}

TEST_CASE("kernel norms via the handle") {
    lgm_params p;
    lgm_params_default(&p);
    p.delta = 1.0;
    p.n_max = 16;
    lgm_report* r = nullptr;
    REQUIRE(lgm_run("kernel-norms", &p, &r) == LGM_OK);
    CHECK(lgm_report_admissible(r) == 1);
    CHECK(lgm_report_verdict(r) == LGM_CONSISTENT);
    double expected = 0;
    CHECK(lgm_report_note(r, "expected_slope", &expected) == LGM_OK);
    CHECK(expected == doctest::Approx(0.0));
    CHECK(lgm_report_write(r, "xml", "-") == LGM_EINVAL);
    CHECK(lgm_report_write(r, "csv", "/nonexistent-dir/out.csv") == LGM_EIO);
    lgm_report_destroy(r);
}
