#pragma once

// Four-mode Fock realization of one (k, r) sector of the mixed-field theory:
// particle modes (a1, a2) at +k, antiparticle modes (b1, b2) at -k. The
// flavor annihilators carry the Bogoliubov structure
//   alpha_e(t) = cos a1(t) + sin (|U| a2(t) + eps |V| b2^dag(t)),  eps = (-1)^r
// together with the flavor vacuum, flavor states, Noether and flavor charges,
// both su(2) triples and the mixing generator. Direct matrix constructions
// throughout; the generator is a diagnostic, never the source of truth.

#include <array>
#include <cmath>
#include <stdexcept>

#include "nuent/fock.hpp"
#include "nuent/mixing.hpp"
#include "nuent/qft.hpp"

namespace nuent::oracle {

using fock::Complex;
using fock::Matrix;
using fock::Vector;

enum class Flavor { electron, muon };

// Named charge operators and states exposed through the labeled Fock types.
enum class ChargeKind {
    mass_1,
    mass_2,
    flavor_e,
    flavor_mu,
    su2_j1,
    su2_j2,
    su2_j3,
    casimir
};

enum class StateKind { mass_vacuum, flavor_vacuum, nu_e, nu_mu };

class QftOracle {
public:
    QftOracle(const MixingAngle& angle, const KinematicSector& sector, int helicity_r = 1)
        : angle_(angle),
          sector_(sector),
          r_(helicity_r),
          eps_(helicity_r % 2 == 0 ? 1.0 : -1.0),
          space_({{fock::Species::particle, 1, helicity_r},
                  {fock::Species::particle, 2, helicity_r},
                  {fock::Species::antiparticle, 1, helicity_r},
                  {fock::Species::antiparticle, 2, helicity_r}}) {
        if (helicity_r != 1 && helicity_r != 2) {
            throw std::invalid_argument("QftOracle: helicity label r must be 1 or 2");
        }
    }

    const fock::FockSpace& space() const { return space_; }
    const MixingAngle& angle() const { return angle_; }
    const KinematicSector& sector() const { return sector_; }
    int helicity() const { return r_; }
    double eps() const { return eps_; }

    // Mass-basis modes with free time evolution, a_i(t) = a_i e^{-i w_i t}.
    Matrix a(int i, double t) const { return phase(i, t) * space_.annihilator(i - 1); }
    Matrix b(int i, double t) const { return phase(i, t) * space_.annihilator(1 + i); }

    Matrix alpha(Flavor f, double t) const {
        const double c = angle_.cos_theta();
        const double s = angle_.sin_theta();
        const double u = sector_.u_k();
        const double v = sector_.v_k();
        if (f == Flavor::electron) {
            return c * a(1, t) + s * (u * a(2, t) + eps_ * v * b(2, t).adjoint());
        }
        return c * a(2, t) - s * (u * a(1, t) - eps_ * v * b(1, t).adjoint());
    }

    Matrix beta(Flavor f, double t) const {
        const double c = angle_.cos_theta();
        const double s = angle_.sin_theta();
        const double u = sector_.u_k();
        const double v = sector_.v_k();
        if (f == Flavor::electron) {
            return c * b(1, t) + s * (u * b(2, t) - eps_ * v * a(2, t).adjoint());
        }
        return c * b(2, t) - s * (u * b(1, t) + eps_ * v * a(1, t).adjoint());
    }

    Vector mass_vacuum() const { return space_.vacuum(); }

    // Flavor vacuum of the sector, built from the explicit pair-condensate
    // bracket acting on |0>_{1,2}; annihilated by all four flavor operators
    // at t = 0 and normalized by construction.
    Vector flavor_vacuum() const {
        const double s = angle_.sin_theta();
        const double c = angle_.cos_theta();
        const double u = sector_.u_k();
        const double v = sector_.v_k();
        const Matrix a1d = space_.creator(0);
        const Matrix a2d = space_.creator(1);
        const Matrix b1d = space_.creator(2);
        const Matrix b2d = space_.creator(3);
        const Matrix id = space_.identity();

        const Matrix bracket = (1.0 - s * s * v * v) * id -
                               eps_ * s * c * v * (a1d * b2d + a2d * b1d) +
                               eps_ * s * s * v * u * (a1d * b1d - a2d * b2d) +
                               s * s * v * v * (a1d * b2d * a2d * b1d);
        return bracket * space_.vacuum();
    }

    // Flavor states as charge eigenstates, |nu_f> = alpha_f^dag(0) |0>_{e,mu}.
    Vector nu(Flavor f) const { return alpha(f, 0.0).adjoint() * flavor_vacuum(); }

    // The same states written as the explicit three-term brackets on the mass
    // vacuum (single-particle piece plus one triple carrying the condensate).
    Vector nu_bracket(Flavor f) const {
        const double s = angle_.sin_theta();
        const double c = angle_.cos_theta();
        const double u = sector_.u_k();
        const double v = sector_.v_k();
        const Matrix a1d = space_.creator(0);
        const Matrix a2d = space_.creator(1);
        const Matrix b1d = space_.creator(2);
        const Matrix b2d = space_.creator(3);
        Matrix bracket;
        if (f == Flavor::electron) {
            bracket = c * a1d + u * s * a2d - eps_ * v * s * (a1d * a2d * b1d);
        } else {
            bracket = c * a2d - u * s * a1d + eps_ * v * s * (a1d * a2d * b2d);
        }
        return bracket * space_.vacuum();
    }

    // Noether charge of mass field i, normal ordered against |0>_{1,2}.
    Matrix charge_mass(int i) const {
        return space_.number(i - 1) - space_.number(1 + i);
    }

    // Flavor charge at time t in the particle-minus-antiparticle form.
    Matrix charge_flavor_raw(Flavor f, double t) const {
        const Matrix al = alpha(f, t);
        const Matrix be = beta(f, t);
        return al.adjoint() * al - be.adjoint() * be;
    }

    // Normal-ordered flavor charge: flavor-vacuum expectation subtracted
    // explicitly (the subtraction turns out to vanish; keeping it explicit is
    // itself one of the checks).
    Matrix charge_flavor(Flavor f, double t) const {
        const Matrix raw = charge_flavor_raw(f, t);
        const Vector vac = flavor_vacuum();
        return raw - fock::expectation(vac, raw) * space_.identity();
    }

    // Sector restriction of the mass-exchange bilinear (the nu_1^dag nu_2
    // integral): S(t) = |U| a1^dag(t) a2(t) + eps|V| a1^dag(t) b2^dag(t)
    //                 - eps|V| b1(t) a2(t) + |U| b1(t) b2^dag(t).
    Matrix exchange_bilinear(double t) const {
        const double u = sector_.u_k();
        const double v = sector_.v_k();
        return u * a(1, t).adjoint() * a(2, t) + eps_ * v * a(1, t).adjoint() * b(2, t).adjoint() -
               eps_ * v * b(1, t) * a(2, t) + u * b(1, t) * b(2, t).adjoint();
    }

    // Hermitian cross charge entering the flavor-charge decomposition.
    Matrix cross_charge(double t) const {
        const Matrix s = exchange_bilinear(t);
        return s + Matrix(s.adjoint());
    }

    // su(2) triples built from the Noether currents of either basis.
    std::array<Matrix, 3> su2_mass(double t) const {
        const Matrix plus = exchange_bilinear(t);
        const Matrix minus = plus.adjoint();
        return {0.5 * (plus + minus), Complex(0.0, -0.5) * (plus - minus),
                0.5 * (charge_mass(1) - charge_mass(2))};
    }

    std::array<Matrix, 3> su2_flavor(double t) const {
        const double u = sector_.u_k();
        const double v = sector_.v_k();
        const Matrix ae = alpha(Flavor::electron, t);
        const Matrix am = alpha(Flavor::muon, t);
        const Matrix be = beta(Flavor::electron, t);
        const Matrix bm = beta(Flavor::muon, t);
        const Matrix plus = u * ae.adjoint() * am + eps_ * v * ae.adjoint() * bm.adjoint() -
                            eps_ * v * be * am + u * be * bm.adjoint();
        const Matrix minus = plus.adjoint();
        return {0.5 * (plus + minus), Complex(0.0, -0.5) * (plus - minus),
                0.5 * (charge_flavor_raw(Flavor::electron, t) -
                       charge_flavor_raw(Flavor::muon, t))};
    }

    // Labeled dispatch over every Hermitian charge the checks consume. The
    // su(2) kinds are taken in the flavor basis at time t; the Casimir is
    // half the total conserved charge.
    fock::FockOperator charge_operator(ChargeKind kind, double t) const {
        switch (kind) {
            case ChargeKind::mass_1:
                return {charge_mass(1), "Q_1"};
            case ChargeKind::mass_2:
                return {charge_mass(2), "Q_2"};
            case ChargeKind::flavor_e:
                return {charge_flavor(Flavor::electron, t), "Q_e(t) normal ordered"};
            case ChargeKind::flavor_mu:
                return {charge_flavor(Flavor::muon, t), "Q_mu(t) normal ordered"};
            case ChargeKind::su2_j1:
                return {su2_flavor(t)[0], "J_1^f(t)"};
            case ChargeKind::su2_j2:
                return {su2_flavor(t)[1], "J_2^f(t)"};
            case ChargeKind::su2_j3:
                return {su2_flavor(t)[2], "J_3^f(t)"};
            case ChargeKind::casimir:
                return {0.5 * (charge_mass(1) + charge_mass(2)), "C"};
        }
        throw std::invalid_argument("charge_operator: unknown kind");
    }

    fock::FockState state(StateKind kind) const {
        switch (kind) {
            case StateKind::mass_vacuum:
                return {mass_vacuum(), "|0>_{1,2}"};
            case StateKind::flavor_vacuum:
                return {flavor_vacuum(), "|0>_{e,mu}"};
            case StateKind::nu_e:
                return {nu(Flavor::electron), "|nu_e>"};
            case StateKind::nu_mu:
                return {nu(Flavor::muon), "|nu_mu>"};
        }
        throw std::invalid_argument("state: unknown kind");
    }

    // Generator diagnostic: G = exp(theta (S - S^dag)) with S the t = 0
    // exchange bilinear. When the kernel is right, G^{-1} a_i G reproduces
    // the flavor annihilators and G^{-1}|0>_{1,2} the flavor vacuum.
    Matrix mixing_generator() const {
        const Matrix s = exchange_bilinear(0.0);
        return fock::exp_antihermitian(Matrix(angle_.theta() * (s - Matrix(s.adjoint()))));
    }

private:
    Complex phase(int i, double t) const {
        const double w = (i == 1) ? sector_.omega1() : sector_.omega2();
        return std::exp(Complex(0.0, -w * t));
    }

    MixingAngle angle_;
    KinematicSector sector_;
    int r_;
    double eps_;
    fock::FockSpace space_;
};

// Pieces of the charge-variance reduction: the four-point function collapses
// onto the antiparticle number, and the assembled variance onto the product
// of the two charge expectations.
struct FourPointReport {
    double four_point;         // <nu_e| n_alpha(t) n_beta(t) |nu_e>
    double beta_number;        // <nu_e| n_beta(t) |nu_e>
    double assembled_variance; // <n_a>+<n_b>-2<n_a n_b> - (<n_a>-<n_b>)^2
    double charge_product;     // q_ee q_emu from the matrix charge expectation
    double identity_residual;  // |four_point - beta_number|
    double variance_residual;  // |assembled_variance - charge_product|
};

inline FourPointReport verify_four_point_identity(const MixingAngle& angle,
                                                  const KinematicSector& sector, int helicity_r,
                                                  double t) {
    const QftOracle oracle(angle, sector, helicity_r);
    const Vector state = oracle.nu(Flavor::electron);
    const Matrix al = oracle.alpha(Flavor::electron, t);
    const Matrix be = oracle.beta(Flavor::electron, t);
    const Matrix n_alpha = al.adjoint() * al;
    const Matrix n_beta = be.adjoint() * be;

    FourPointReport rep;
    rep.four_point = fock::expectation(state, Matrix(n_alpha * n_beta)).real();
    rep.beta_number = fock::expectation(state, n_beta).real();
    const double mean_alpha = fock::expectation(state, n_alpha).real();
    const double q_ee = mean_alpha - rep.beta_number;
    rep.assembled_variance =
        mean_alpha + rep.beta_number - 2.0 * rep.four_point - q_ee * q_ee;
    rep.charge_product = q_ee * (1.0 - q_ee);
    rep.identity_residual = std::abs(rep.four_point - rep.beta_number);
    rep.variance_residual = std::abs(rep.assembled_variance - rep.charge_product);
    return rep;
}

}  // namespace nuent::oracle
