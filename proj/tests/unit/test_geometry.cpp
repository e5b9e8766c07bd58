#include "rydgiant/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace rydgiant;

namespace {

constexpr double kPi = std::numbers::pi;
const double kC6 = 2.0 * kPi * 2.8e12;
const double kOmegaE = 2.0 * kPi * 1009e12;
const double kVg = 0.5 * kSpeedOfLight;

}  // namespace

TEST_CASE("van der Waals shift") {
    const double v = vdw_shift(kC6, 3.1);
    CHECK(v == doctest::Approx(1.98e10).epsilon(0.01));
    CHECK(vdw_shift(kC6, 6.2) == doctest::Approx(v / 64.0).epsilon(1e-14));
    CHECK(vdw_shift(0.0, 3.1) == 0.0);
    CHECK(per_us(v) == doctest::Approx(19822.9).epsilon(1e-5));
    CHECK_THROWS_AS(vdw_shift(kC6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(vdw_shift(kC6, -1.0), std::invalid_argument);
}

TEST_CASE("propagation phase") {
    const double phi = phase_from_separation(kOmegaE, 3.1, kVg);
    CHECK(phi / kPi == doctest::Approx(41.7).epsilon(0.002));
    CHECK(std::abs(phi / kPi - 41.6) <= 0.2);
    CHECK(phase_from_separation(kOmegaE, 0.0, kVg) == 0.0);
    CHECK(phase_from_separation(kOmegaE, 6.2, kVg) == doctest::Approx(2.0 * phi).epsilon(1e-15));
    CHECK_THROWS_AS(phase_from_separation(0.0, 3.1, kVg), std::invalid_argument);
    CHECK_THROWS_AS(phase_from_separation(kOmegaE, 3.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(phase_from_separation(kOmegaE, -1.0, kVg), std::invalid_argument);
}

TEST_CASE("projected separation") {
    CHECK(projected_separation(3.1, 0.0) == 3.1);
    const double d = projected_separation(3.1, 0.09 * kPi);
    CHECK(d == doctest::Approx(2.98).epsilon(0.002));
    CHECK(std::abs(d - 2.95) / 2.95 < 0.011);
    CHECK(projected_separation(3.1, std::nextafter(kPi / 2, 0.0)) < 1e-15);
    CHECK_THROWS_AS(projected_separation(3.1, kPi / 2), std::invalid_argument);
    CHECK_THROWS_AS(projected_separation(3.1, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(projected_separation(0.0, 0.1), std::invalid_argument);
}

TEST_CASE("coupling width") {
    const double h = 300.0;
    CHECK(coupling_width(h * std::sqrt(2.0), h, kOmegaE, kVg) ==
          doctest::Approx(2.0 * h * 1e-9 * kOmegaE / kVg).epsilon(1e-14));
    CHECK(coupling_width(583.0, 449.0, kOmegaE, kVg) == doctest::Approx(31.4).epsilon(0.003));
    CHECK(coupling_width(std::nextafter(449.0, 500.0), 449.0, kOmegaE, kVg) < 1e-3);
    CHECK_THROWS_AS(coupling_width(449.0, 449.0, kOmegaE, kVg), std::invalid_argument);
    CHECK_THROWS_AS(coupling_width(400.0, 449.0, kOmegaE, kVg), std::invalid_argument);
    CHECK_THROWS_AS(coupling_width(583.0, 0.0, kOmegaE, kVg), std::invalid_argument);
}

TEST_CASE("aligned round trip and tunability by misalignment") {
    CHECK(phase_from_separation(kOmegaE, projected_separation(3.1, 0.0), kVg) ==
          phase_from_separation(kOmegaE, 3.1, kVg));

    double prev = phase_from_separation(kOmegaE, projected_separation(3.1, 0.0), kVg);
    const double first = prev;
    for (int k = 1; k <= 90; ++k) {
        const double phi = phase_from_separation(kOmegaE, projected_separation(3.1, 0.001 * k * kPi), kVg);
        CHECK(phi < prev);
        prev = phi;
    }
    CHECK(std::abs(prev / first - std::cos(0.09 * kPi)) / std::cos(0.09 * kPi) < 0.01);
}

TEST_CASE("derived model parameters") {
    LabGeometry g;
    g.C6 = kC6;
    g.R = 3.1;
    g.omega_e = kOmegaE;
    g.v_g = kVg;
    auto d = derive(g);
    CHECK(d.V6 == doctest::Approx(19822.9).epsilon(1e-5));
    CHECK(d.d == 3.1);
    CHECK(d.phi.pi_units() == doctest::Approx(41.7).epsilon(0.002));
    CHECK(d.theta == 0.0);
    CHECK(d.notes.empty());

    g.misalign_angle = 0.09 * kPi;
    g.r_bar = 583.0;
    g.h = 449.0;
    d = derive(g);
    CHECK(d.d == doctest::Approx(2.98).epsilon(0.002));
    CHECK(d.theta == doctest::Approx(31.4).epsilon(0.003));
    CHECK(d.notes.size() == 1);
}
