#pragma once

#include <cmath>
#include <numbers>

namespace rydgiant {

// sin(pi*x) and cos(pi*x) with exact values at multiples of 1/2. The accumulated
// phases of interest (40pi, 40.5pi, 41pi, ...) land on these points, and
// sin(41*M_PI) in plain double arithmetic is ~1e-15 rather than 0.
inline double sin_pi(double x) {
    double r = std::fmod(x, 2.0);  // exact
    if (r < 0.0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(std::numbers::pi * r);
}

inline double cos_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0) return 1.0;
    if (r == 1.0) return -1.0;
    if (r == 0.5 || r == 1.5) return 0.0;
    return std::cos(std::numbers::pi * r);
}

/// Propagation phase, stored in units of pi.
class Phase {
public:
    constexpr Phase() = default;

    static constexpr Phase from_pi_units(double units) { return Phase(units); }
    static constexpr Phase from_radians(double rad) { return Phase(rad / std::numbers::pi); }

    constexpr double pi_units() const { return units_; }
    constexpr double radians() const { return units_ * std::numbers::pi; }

    double sin() const { return sin_pi(units_); }
    double cos() const { return cos_pi(units_); }

    friend constexpr bool operator==(Phase, Phase) = default;

private:
    constexpr explicit Phase(double units) : units_(units) {}
    double units_ = 0.0;
};

}  // namespace rydgiant
