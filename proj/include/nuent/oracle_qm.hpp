#pragma once

// Two-mode Fock realization of the plane-wave treatment: mass modes (a1, a2),
// flavor annihilators a_e(t) = cos a1 e^{-i w1 t} + sin a2 e^{-i w2 t} and
// a_mu(t) = -sin a1 e^{-i w1 t} + cos a2 e^{-i w2 t}, flavor states, number
// operators, the flavor-basis su(2) triple and the Hamiltonian. Everything is
// an exact dense matrix; no closed-form shortcut enters.

#include <array>
#include <cmath>

#include "nuent/fock.hpp"
#include "nuent/mixing.hpp"
#include "nuent/qm.hpp"

namespace nuent::oracle {

using fock::Complex;
using fock::Matrix;
using fock::Vector;

class QmOracle {
public:
    QmOracle(const MixingAngle& angle, const QmSpectrum& spec)
        : angle_(angle),
          spec_(spec),
          space_({{fock::Species::particle, 1, 1}, {fock::Species::particle, 2, 1}}) {}

    const fock::FockSpace& space() const { return space_; }
    const MixingAngle& angle() const { return angle_; }
    const QmSpectrum& spectrum() const { return spec_; }

    Matrix mass_annihilator(int i, double t) const {
        const double w = (i == 1) ? spec_.omega1 : spec_.omega2;
        return std::exp(Complex(0.0, -w * t)) * space_.annihilator(i - 1);
    }

    Matrix flavor_e(double t) const {
        return angle_.cos_theta() * mass_annihilator(1, t) +
               angle_.sin_theta() * mass_annihilator(2, t);
    }

    Matrix flavor_mu(double t) const {
        return -angle_.sin_theta() * mass_annihilator(1, t) +
               angle_.cos_theta() * mass_annihilator(2, t);
    }

    Matrix number_e(double t) const {
        const Matrix a = flavor_e(t);
        return a.adjoint() * a;
    }

    Matrix number_mu(double t) const {
        const Matrix a = flavor_mu(t);
        return a.adjoint() * a;
    }

    Matrix number_mass(int i) const { return space_.number(i - 1); }

    // Flavor-basis su(2) triple at time t plus the Casimir (half the total
    // number, basis independent).
    Matrix j_plus(double t) const { return flavor_e(t).adjoint() * flavor_mu(t); }

    std::array<Matrix, 3> su2_flavor(double t) const {
        const Matrix plus = j_plus(t);
        const Matrix minus = plus.adjoint();
        return {0.5 * (plus + minus), Complex(0.0, -0.5) * (plus - minus),
                0.5 * (number_e(t) - number_mu(t))};
    }

    std::array<Matrix, 3> su2_mass() const {
        const Matrix plus = space_.creator(0) * space_.annihilator(1);
        const Matrix minus = plus.adjoint();
        return {0.5 * (plus + minus), Complex(0.0, -0.5) * (plus - minus),
                0.5 * (number_mass(1) - number_mass(2))};
    }

    Matrix casimir() const { return 0.5 * (number_mass(1) + number_mass(2)); }

    Matrix hamiltonian() const {
        return spec_.omega1 * number_mass(1) + spec_.omega2 * number_mass(2);
    }

    // |nu_e(t)> = a_e^dag(t) |0>, |nu_mu(t)> likewise.
    Vector nu_e(double t) const { return flavor_e(t).adjoint() * space_.vacuum(); }
    Vector nu_mu(double t) const { return flavor_mu(t).adjoint() * space_.vacuum(); }

    // Mass -> flavor basis rotation on the Fock space,
    // G = exp(theta (a1^dag a2 - a2^dag a1)); G^{-1} a1 G = a_e(0).
    // Components of G|psi> in the occupation basis are the components of
    // |psi> in the flavor-mode occupation basis.
    Matrix mass_to_flavor_rotation() const {
        const Matrix s = space_.creator(0) * space_.annihilator(1);
        return fock::exp_antihermitian(Matrix(angle_.theta() * (s - s.adjoint())));
    }

private:
    MixingAngle angle_;
    QmSpectrum spec_;
    fock::FockSpace space_;
};

}  // namespace nuent::oracle
