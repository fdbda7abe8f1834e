#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qcap/errors.hpp"
#include "qcap/quadrature.hpp"

using namespace qcap;

TEST_CASE("polynomials are integrated exactly") {
    const auto r = integrate_adaptive<double>([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
    CHECK(r.value == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("smooth integrands meet the relative tolerance") {
    const auto r = integrate_adaptive<double>([](double x) { return std::exp(-x * x); }, 0.0, 5.0);
    CHECK(std::abs(r.value - 0.5 * std::sqrt(std::numbers::pi) * std::erf(5.0)) < 1e-12);

    const auto s = integrate_adaptive<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(s.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("reversed limits flip the sign, empty interval is zero") {
    auto f = [](double x) { return std::cos(x); };
    CHECK(integrate_adaptive<double>(f, 1.0, 0.0).value == doctest::Approx(-std::sin(1.0)).epsilon(1e-13));
    CHECK(integrate_adaptive<double>(f, 0.3, 0.3).value == 0.0);
}

TEST_CASE("an unreachable tolerance reports QuadratureFailure") {
    auto nasty = [](double x) { return std::sin(1.0 / x) / x; };
    CHECK_THROWS_AS(integrate_adaptive<double>(nasty, 1e-6, 1.0, 1e-14, 20), QuadratureFailure);
}
