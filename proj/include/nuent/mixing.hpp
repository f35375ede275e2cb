#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace nuent {

// Two-flavor mixing angle, restricted to the first quadrant so that the
// sin^2(theta) <-> theta conversion has no branch ambiguity. Trig factors
// are computed once; every observable in the library is built from them.
class MixingAngle {
public:
    explicit MixingAngle(double theta_rad) : theta_(theta_rad) {
        if (!std::isfinite(theta_rad) || theta_rad < 0.0 || theta_rad > half_pi()) {
            throw std::invalid_argument("MixingAngle: theta must lie in [0, pi/2]");
        }
        sin_ = std::sin(theta_);
        cos_ = std::cos(theta_);
    }

    // Construct from sin^2(theta), the parametrization used for experimental values.
    static MixingAngle from_sin2(double sin2_theta) {
        if (!std::isfinite(sin2_theta) || sin2_theta < 0.0 || sin2_theta > 1.0) {
            throw std::invalid_argument("MixingAngle: sin^2(theta) must lie in [0, 1]");
        }
        return MixingAngle(std::asin(std::sqrt(sin2_theta)));
    }

    double theta() const { return theta_; }
    double sin_theta() const { return sin_; }
    double cos_theta() const { return cos_; }
    double sin2_theta() const { return sin_ * sin_; }   // sin^2(theta)
    double cos2_theta() const { return cos_ * cos_; }

    // sin^2(2 theta) as 4 sin^2 cos^2; this exact product form is the one the
    // entropy and variance formulas share.
    double sin2_two_theta() const { return 4.0 * sin2_theta() * cos2_theta(); }

    static constexpr double half_pi() { return 1.57079632679489661923; }

private:
    double theta_;
    double sin_;
    double cos_;
};

// Rotation connecting the flavor doublet to the mass doublet:
// [[cos, sin], [-sin, cos]].
inline Eigen::Matrix2d mixing_matrix(const MixingAngle& angle) {
    Eigen::Matrix2d u;
    u << angle.cos_theta(), angle.sin_theta(),
        -angle.sin_theta(), angle.cos_theta();
    return u;
}

}  // namespace nuent
