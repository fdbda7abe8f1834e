#include "doctest.h"

#include "qcap/constants.hpp"
#include "qcap/errors.hpp"

using namespace qcap;
using K = PhysicalConstants;

TEST_CASE("exact SI constants") {
    CHECK(K::e == 1.602176634e-19);
    CHECK(K::k_B == 1.380649e-23);
    CHECK(K::h == 6.62607015e-34);
    CHECK(K::c == 299792458.0);
    CHECK(K::hbar == doctest::Approx(1.054571817e-34).epsilon(1e-9));
    CHECK(K::v_F_default == doctest::Approx(999308.193).epsilon(1e-9));
}

TEST_CASE("unit round trips") {
    for (double x : {1e-3, 0.25, 1.0, 4.0, 123.456}) {
        CHECK(units::rad_s_to_ghz(units::ghz_to_rad_s(x)) == doctest::Approx(x).epsilon(1e-15));
        CHECK(units::m2_to_um2(units::um2_to_m2(x)) == doctest::Approx(x).epsilon(1e-15));
        CHECK(units::m_to_nm(units::nm_to_m(x)) == doctest::Approx(x).epsilon(1e-15));
        CHECK(units::si_to_ff_per_um2(units::ff_per_um2_to_si(x)) == doctest::Approx(x).epsilon(1e-15));
        CHECK(units::f_to_ff(units::ff_to_f(x)) == doctest::Approx(x).epsilon(1e-15));
        CHECK(units::rad_to_pi_units(units::pi_units_to_rad(x)) == doctest::Approx(x).epsilon(1e-15));
    }
    // 1 fF/um^2 = 1e-15 F / 1e-12 m^2.
    CHECK(units::ff_per_um2_to_si(1.0) == doctest::Approx(1e-3));
}

TEST_CASE("fermi energy is half the bias") {
    CHECK(fermi_energy(1e-3) == doctest::Approx(0.5 * K::e * 1e-3));
    CHECK(fermi_energy(-2.0) == doctest::Approx(-K::e));
}

TEST_CASE("thermal energy rejects non-positive temperature") {
    CHECK(thermal_energy(1.0) == doctest::Approx(K::k_B));
    CHECK_THROWS_AS(thermal_energy(0.0), NonPositiveTemperature);
    CHECK_THROWS_AS(thermal_energy(-1.0), DomainError);
}
