#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asq/fit.hpp"

#include <cmath>

using namespace asq;

TEST_CASE("exact log-linear data is recovered") {
    std::vector<std::pair<double, double>> samples;
    for (int x = 2; x <= 100; ++x)
        samples.emplace_back(static_cast<double>(x), 2.0 * std::log(static_cast<double>(x)));
    const auto r = ols_loglinear(samples);
    CHECK(r.lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.kappa == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(r.residual_rms < 1e-12);
}

TEST_CASE("constant step data gives lambda = 0") {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts = {{5, 7}, {1000, 7}};
    const auto r = fit_loglinear(pts, true);
    CHECK(r.lambda == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(r.kappa == doctest::Approx(7.0).epsilon(1e-9));
    CHECK(r.sample_mode == "dense");
}

TEST_CASE("refit reproduces the coefficients") {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts = {
        {3, 1}, {12, 2}, {70, 3}, {500, 4}, {1000, 5}};
    const auto a = fit_loglinear(pts, false);
    const auto b = fit_loglinear(pts, false);
    CHECK(a.lambda == doctest::Approx(b.lambda).epsilon(1e-9));
    CHECK(a.kappa == doctest::Approx(b.kappa).epsilon(1e-9));
    CHECK(a.sample_mode == "jumps");
    CHECK(a.samples == 5);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(ols_loglinear({{2, 1}, {3, 2}}), std::domain_error);
    CHECK_THROWS_AS(ols_loglinear({{2, 1}, {2, 1}, {2, 1}, {2, 1}}), std::domain_error);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> none = {{1, 0}, {5, 0}};
    CHECK_THROWS_AS(fit_loglinear(none, true), std::domain_error);
}
