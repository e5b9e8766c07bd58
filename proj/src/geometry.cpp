#include "rydgiant/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rydgiant {

double vdw_shift(double C6, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("vdw_shift: R must be > 0");
    return C6 / std::pow(R, 6);
}

double phase_from_separation(double omega_e, double d, double v_g) {
    if (!(omega_e > 0.0) || !(v_g > 0.0) || !(d >= 0.0))
        throw std::invalid_argument("phase_from_separation: omega_e, v_g must be > 0 and d >= 0");
    return omega_e * (d * 1e-6) / v_g;
}

double projected_separation(double R, double misalign_angle) {
    if (!(R > 0.0)) throw std::invalid_argument("projected_separation: R must be > 0");
    if (!(misalign_angle >= 0.0 && misalign_angle < std::numbers::pi / 2))
        throw std::invalid_argument("projected_separation: angle must lie in [0, pi/2)");
    return R * std::cos(misalign_angle);
}

double coupling_width(double r_bar, double h, double omega_e, double v_g) {
    if (!(h > 0.0)) throw std::invalid_argument("coupling_width: h must be > 0");
    if (!(r_bar > h))
        throw std::invalid_argument("coupling_width: r_bar <= h, atom does not overlap the evanescent field");
    if (!(omega_e > 0.0) || !(v_g > 0.0))
        throw std::invalid_argument("coupling_width: omega_e and v_g must be > 0");
    return 2.0 * std::sqrt(r_bar * r_bar - h * h) * 1e-9 * omega_e / v_g;
}

DerivedGeometry derive(const LabGeometry& g) {
    DerivedGeometry out;
    out.V6 = per_us(vdw_shift(g.C6, g.R));
    out.d = projected_separation(g.R, g.misalign_angle);
    out.phi = Phase::from_radians(phase_from_separation(g.omega_e, out.d, g.v_g));
    if (g.r_bar > 0.0) out.theta = coupling_width(g.r_bar, g.h, g.omega_e, g.v_g);
    if (g.misalign_angle > 0.0) {
        std::ostringstream os;
        os << "d = R cos(angle) = " << out.d << " um (pure projection)";
        out.notes.push_back(os.str());
    }
    return out;
}

}  // namespace rydgiant
