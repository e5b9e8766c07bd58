#pragma once

#include "rydgiant/phase.hpp"

#include <string>
#include <vector>

namespace rydgiant {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Laboratory description of the atom pair next to the waveguide.
struct LabGeometry {
    double C6 = 0.0;              // rad/s * um^6
    double R = 0.0;               // interatomic distance, um
    double omega_e = 0.0;         // lower transition angular frequency, rad/s
    double v_g = 0.0;             // group velocity, m/s
    double misalign_angle = 0.0;  // rad, 0 = atoms along the waveguide axis
    double r_bar = 0.0;           // Rydberg orbital radius, nm (0 = point coupling)
    double h = 0.0;               // nucleus to evanescent-surface distance, nm
};

double vdw_shift(double C6, double R);                               // rad/s
double phase_from_separation(double omega_e, double d, double v_g);  // rad
double projected_separation(double R, double misalign_angle);         // um
double coupling_width(double r_bar, double h, double omega_e, double v_g);  // rad

/// rad/s -> 1/us
constexpr double per_us(double rad_per_s) { return rad_per_s * 1e-6; }

struct DerivedGeometry {
    double V6 = 0.0;  // 1/us
    double d = 0.0;   // um
    Phase phi;
    double theta = 0.0;  // rad; 0 when r_bar == 0
    std::vector<std::string> notes;
};

DerivedGeometry derive(const LabGeometry& geometry);

}  // namespace rydgiant
