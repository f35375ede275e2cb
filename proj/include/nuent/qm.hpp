#pragma once

// Plane-wave quantum mechanics of two-flavor mixing: time evolution in the
// flavor basis, transition probabilities, reduced-density eigenvalues, linear
// entropies and the variance-based entanglement measures.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "nuent/mixing.hpp"

namespace nuent {

using Complex = std::complex<double>;

// Energies of the two mass eigenstates (natural units, hbar = c = 1).
// omega2 >= omega1 is not required; the sign of the gap only flips a phase.
struct QmSpectrum {
    double omega1;
    double omega2;

    QmSpectrum(double w1, double w2) : omega1(w1), omega2(w2) {
        if (!std::isfinite(w1) || !std::isfinite(w2)) {
            throw std::invalid_argument("QmSpectrum: energies must be finite");
        }
    }

    double delta() const { return omega2 - omega1; }
};

namespace detail {
inline void require_finite_time(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
}
inline double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }
}  // namespace detail

// Flavor-basis evolution matrix U(theta) diag(e^{-i w1 t}, e^{-i w2 t}) U(theta)^{-1}.
// Rows/columns ordered (e, mu); equals the identity at t = 0.
struct FlavorAmplitudes {
    Complex u_ee;
    Complex u_emu;
    Complex u_mue;
    Complex u_mumu;
    double t = 0.0;
};

inline FlavorAmplitudes evolve_amplitudes(const MixingAngle& angle, const QmSpectrum& spec,
                                          double t) {
    detail::require_finite_time(t);
    const Complex e1 = std::exp(Complex(0.0, -spec.omega1 * t));
    const Complex e2 = std::exp(Complex(0.0, -spec.omega2 * t));
    const double c2 = angle.cos2_theta();
    const double s2 = angle.sin2_theta();
    const double sc = angle.sin_theta() * angle.cos_theta();
    FlavorAmplitudes u;
    u.u_ee = c2 * e1 + s2 * e2;
    u.u_emu = sc * (e2 - e1);
    u.u_mue = u.u_emu;  // the rotation is orthogonal, the off-diagonals coincide
    u.u_mumu = s2 * e1 + c2 * e2;
    u.t = t;
    return u;
}

// The survival/transition pair of Pontecorvo oscillations. Conservation
// p_ee + p_emu = 1 holds by construction.
struct TransitionProbabilities {
    double p_ee;
    double p_emu;
};

// Dimensionless oscillation phase (omega2 - omega1) t / 2.
inline double oscillation_phase(const QmSpectrum& spec, double t) {
    return 0.5 * spec.delta() * t;
}

inline TransitionProbabilities transition_probabilities_from_phase(const MixingAngle& angle,
                                                                   double phase) {
    const double s = std::sin(phase);
    const double p_emu = detail::clamp_unit(angle.sin2_two_theta() * s * s);
    return {1.0 - p_emu, p_emu};
}

inline TransitionProbabilities transition_probabilities(const MixingAngle& angle,
                                                        const QmSpectrum& spec, double t) {
    detail::require_finite_time(t);
    return transition_probabilities_from_phase(angle, oscillation_phase(spec, t));
}

// Eigenvalues of a 2x2 reduced density matrix, lambda1 + lambda2 = 1.
struct ReducedDensity {
    double lambda1;
    double lambda2;
};

// Reductions of |nu_e(t)><nu_e(t)| over either mass mode. Both carry the
// eigenvalue pair (cos^2 theta, sin^2 theta) at any time.
inline std::pair<ReducedDensity, ReducedDensity> reduced_densities_static(
    const MixingAngle& angle) {
    const ReducedDensity rho{angle.cos2_theta(), angle.sin2_theta()};
    return {rho, rho};
}

// S_L = 2 (1 - Tr rho^2) = sin^2(2 theta) for the mass-mode bipartition.
inline double linear_entropy_static(const MixingAngle& angle) {
    return angle.sin2_two_theta();
}

// Variance of either mass-number operator on a flavor state: (1/4) sin^2(2 theta).
// Exactly a quarter of the static linear entropy, same arithmetic path.
inline double variance_mass_number_static(const MixingAngle& angle) {
    return 0.25 * linear_entropy_static(angle);
}

// Variance of the flavor-number operator at time t on |nu_e>; equals the
// product of the two transition probabilities.
inline double variance_flavor_number_dynamic(const MixingAngle& angle, const QmSpectrum& spec,
                                             double t) {
    const auto p = transition_probabilities(angle, spec, t);
    return p.p_ee * p.p_emu;
}

// Linear entropy of the flavor-mode reduction at time t; exactly four times
// the flavor-number variance (shared arithmetic path keeps the factor exact).
inline double linear_entropy_dynamic(const MixingAngle& angle, const QmSpectrum& spec,
                                     double t) {
    return 4.0 * variance_flavor_number_dynamic(angle, spec, t);
}

// Coefficients of the Hamiltonian rewritten in the flavor basis:
// H = w_ee N_e(t) + w_mumu N_mu(t) + w_emu (J+ + J-).
struct HamiltonianCoefficients {
    double w_ee;
    double w_mumu;
    double w_emu;
};

inline HamiltonianCoefficients hamiltonian_coefficients(const MixingAngle& angle,
                                                        const QmSpectrum& spec) {
    const double c2 = angle.cos2_theta();
    const double s2 = angle.sin2_theta();
    return {spec.omega1 * c2 + spec.omega2 * s2,
            spec.omega1 * s2 + spec.omega2 * c2,
            spec.delta() * angle.sin_theta() * angle.cos_theta()};
}

// Variances of the flavor-basis su(2) operators on |nu_e>, with operators
// taken at time t. Two surfaces are exposed:
//  - from_state: exact one-particle-sector values, Delta^2 J_i = 1/4 - <J_i>^2,
//    cross-checked against the dense Fock computation. Ground truth.
//  - literature: the commonly quoted closed forms evaluated verbatim. The J2
//    entry disagrees with the exact result by a factor 4 in its oscillating
//    coefficient (and can go negative); callers are expected to report the
//    gap, never to hide it.
struct Su2Variances {
    double j1;
    double j2;
    double j3;
    double casimir;
};

struct Su2Expectations {
    double j1;
    double j2;
    double j3;
};

struct Su2FlavorReport {
    Su2Variances from_state;
    Su2Variances literature;
    Su2Expectations expectations;
};

inline Su2FlavorReport su2_flavor_variances(const MixingAngle& angle, const QmSpectrum& spec,
                                            double t) {
    const FlavorAmplitudes u = evolve_amplitudes(angle, spec, t);
    const auto p = transition_probabilities(angle, spec, t);

    // J+ = a_e^dag(t) a_mu(t), J1 = (J+ + J-)/2, J2 = (J+ - J-)/(2i).
    const Complex cross = std::conj(u.u_ee) * u.u_emu;
    const Su2Expectations exp{cross.real(), cross.imag(), 0.5 * (p.p_ee - p.p_emu)};

    Su2FlavorReport report;
    report.expectations = exp;
    report.from_state = {0.25 - exp.j1 * exp.j1, 0.25 - exp.j2 * exp.j2,
                         0.25 - exp.j3 * exp.j3, 0.0};

    const double dwt = spec.delta() * t;
    const double s4 = std::sin(4.0 * angle.theta());
    const double half = std::sin(0.5 * dwt);
    const double full = std::sin(dwt);
    const double s22 = angle.sin2_two_theta();
    report.literature = {0.25 * (1.0 - s4 * s4 * half * half * half * half),
                         0.25 - s22 * full * full,
                         s22 * half * half * (1.0 - s22 * half * half), 0.0};
    return report;
}

// Predicted size of the J2 disagreement between the exact sector value and
// the quoted closed form: (3/4) sin^2(2 theta) sin^2((omega2-omega1) t).
inline double su2_j2_literature_gap(const MixingAngle& angle, const QmSpectrum& spec,
                                    double t) {
    const double full = std::sin(spec.delta() * t);
    return 0.75 * angle.sin2_two_theta() * full * full;
}

// Aggregate of the dynamic entanglement measures on |nu_e> at time t.
struct QmEntanglementReport {
    double s_linear;
    double var_n;
    double var_j1;
    double var_j2;
    double var_j3;
    double var_c;
};

inline QmEntanglementReport qm_entanglement_report(const MixingAngle& angle,
                                                   const QmSpectrum& spec, double t) {
    const auto su2 = su2_flavor_variances(angle, spec, t);
    QmEntanglementReport r;
    r.var_n = variance_flavor_number_dynamic(angle, spec, t);
    r.s_linear = 4.0 * r.var_n;
    r.var_j1 = su2.from_state.j1;
    r.var_j2 = su2.from_state.j2;
    r.var_j3 = su2.from_state.j3;
    r.var_c = su2.from_state.casimir;
    return r;
}

}  // namespace nuent
