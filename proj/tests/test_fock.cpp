#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "nuent/fock.hpp"
#include "nuent/oracle_qft.hpp"
#include "nuent/oracle_qm.hpp"
#include "nuent/verify.hpp"

using nuent::KinematicSector;
using nuent::MixingAngle;
using nuent::QmSpectrum;
using nuent::fock::Complex;
using nuent::fock::FockSpace;
using nuent::fock::Matrix;
using nuent::fock::Species;
using nuent::fock::Vector;
using nuent::oracle::Flavor;
using nuent::oracle::QftOracle;
using nuent::oracle::QmOracle;

namespace {
constexpr double kPi = 3.14159265358979323846;

FockSpace make_space(int n) {
    std::vector<nuent::fock::ModeLabel> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back({Species::particle, 1 + i % 2, 1});
    }
    return FockSpace(std::move(labels));
}
}  // namespace

TEST_CASE("jordan-wigner construction", "[fock]") {
    SECTION("single mode annihilator") {
        const FockSpace space = make_space(1);
        REQUIRE(space.dim() == 2);
        REQUIRE(space.annihilator(0)(0, 1) == Complex(1.0));
        REQUIRE(nuent::fock::max_abs(
                    Matrix(space.annihilator(0) - (Matrix(2, 2) << 0, 1, 0, 0).finished())) ==
                0.0);
    }

    SECTION("mode count bounds") {
        REQUIRE_THROWS_AS(make_space(0), std::invalid_argument);
        REQUIRE_THROWS_AS(make_space(13), std::invalid_argument);
    }

    SECTION("car relations are exact on two and four modes") {
        for (int n : {2, 4}) {
            const FockSpace space = make_space(n);
            const Matrix id = space.identity();
            for (int i = 0; i < n; ++i) {
                const Matrix& ai = space.annihilator(i);
                REQUIRE(nuent::fock::max_abs(Matrix(ai * ai)) == 0.0);
                for (int j = 0; j < n; ++j) {
                    const Matrix& aj = space.annihilator(j);
                    Matrix pair = nuent::fock::anticommutator(ai, Matrix(aj.adjoint()));
                    if (i == j) pair -= id;
                    REQUIRE(nuent::fock::max_abs(pair) < 1e-13);
                    REQUIRE(nuent::fock::max_abs(nuent::fock::anticommutator(ai, aj)) < 1e-13);
                }
            }
        }
    }

    SECTION("expectation rejects mismatched dimensions") {
        const FockSpace two = make_space(2);
        const FockSpace one = make_space(1);
        REQUIRE_THROWS_AS(nuent::fock::expectation(two.vacuum(), one.annihilator(0)),
                          std::invalid_argument);
    }
}

TEST_CASE("reduced densities in the occupation basis", "[fock]") {
    const FockSpace space = make_space(2);
    // (|10> + |01>)/sqrt(2): both mode reductions are maximally mixed.
    Vector bell = Vector::Zero(4);
    bell(1) = 1.0 / std::sqrt(2.0);
    bell(2) = 1.0 / std::sqrt(2.0);
    for (int mode : {0, 1}) {
        const Matrix rho = nuent::fock::reduced_density(bell, 2, {mode});
        REQUIRE(std::abs(rho(0, 0).real() - 0.5) < 1e-14);
        REQUIRE(std::abs(rho(1, 1).real() - 0.5) < 1e-14);
        REQUIRE(std::abs(nuent::fock::linear_entropy(rho) - 1.0) < 1e-13);
    }
}

TEST_CASE("plane-wave oracle: flavor operators", "[fock][qm-oracle]") {
    const QmSpectrum spec(1.0, 2.0);

    SECTION("no mixing at t = 0 returns the mass operators") {
        const QmOracle oracle(MixingAngle(0.0), spec);
        REQUIRE(nuent::fock::max_abs(
                    Matrix(oracle.flavor_e(0.0) - oracle.space().annihilator(0))) == 0.0);
        REQUIRE(nuent::fock::max_abs(
                    Matrix(oracle.flavor_mu(0.0) - oracle.space().annihilator(1))) == 0.0);
    }

    SECTION("canonical at any time") {
        const QmOracle oracle(MixingAngle(0.61), spec);
        const Matrix ae = oracle.flavor_e(3.7);
        REQUIRE(nuent::fock::max_abs(
                    Matrix(nuent::fock::anticommutator(ae, Matrix(ae.adjoint())) -
                           oracle.space().identity())) < 1e-13);
    }

    SECTION("overlap with the t = 0 creator reproduces the evolution matrix") {
        const MixingAngle angle(0.61);
        const QmOracle oracle(angle, spec);
        const double t = 2.9;
        const auto amp = nuent::evolve_amplitudes(angle, spec, t);
        const Matrix overlap = nuent::fock::anticommutator(
            oracle.flavor_e(t), Matrix(oracle.flavor_e(0.0).adjoint()));
        REQUIRE(nuent::fock::max_abs(
                    Matrix(overlap - amp.u_ee * oracle.space().identity())) < 1e-13);
    }

    SECTION("hamiltonian identity, entrywise") {
        const MixingAngle angle(0.83);
        const QmOracle oracle(angle, spec);
        const auto c = nuent::hamiltonian_coefficients(angle, spec);
        const double t = -1.4;
        const Matrix plus = oracle.j_plus(t);
        const Matrix rhs = c.w_ee * oracle.number_e(t) + c.w_mumu * oracle.number_mu(t) +
                           c.w_emu * (plus + Matrix(plus.adjoint()));
        REQUIRE(nuent::fock::max_abs(Matrix(oracle.hamiltonian() - rhs)) < 1e-12);
    }

    SECTION("casimir variance vanishes on one-particle states") {
        const QmOracle oracle(MixingAngle(0.97), spec);
        REQUIRE(std::abs(nuent::fock::variance(oracle.nu_e(1.3), oracle.casimir())) < 1e-13);
    }
}

TEST_CASE("field oracle: flavor operators and vacuum", "[fock][qft-oracle]") {
    const MixingAngle angle = MixingAngle::from_sin2(0.314);
    const KinematicSector sector(1.0, 2.0, 1.0);

    SECTION("no mixing returns the mass operators and vacuum") {
        const QftOracle oracle(MixingAngle(0.0), sector, 1);
        REQUIRE(nuent::fock::max_abs(Matrix(oracle.alpha(Flavor::electron, 0.0) -
                                            oracle.space().annihilator(0))) == 0.0);
        REQUIRE(nuent::fock::max_abs(Matrix(oracle.beta(Flavor::muon, 0.0) -
                                            oracle.space().annihilator(3))) == 0.0);
        REQUIRE((oracle.flavor_vacuum() - oracle.mass_vacuum()).norm() == 0.0);
        REQUIRE(nuent::fock::max_abs(
                    Matrix(oracle.mixing_generator() - oracle.space().identity())) < 1e-14);
    }

    SECTION("degenerate masses reduce to the rotation without antiparticles") {
        const KinematicSector deg(1.4, 1.4, 2.0);
        const QftOracle oracle(angle, deg, 1);
        const Matrix expected = angle.cos_theta() * oracle.a(1, 0.0) +
                                angle.sin_theta() * oracle.a(2, 0.0);
        REQUIRE(nuent::fock::max_abs(
                    Matrix(oracle.alpha(Flavor::electron, 0.0) - expected)) < 1e-14);
    }

    SECTION("flavor vacuum is normalized, annihilated, and overlaps as expected") {
        const QftOracle oracle(angle, sector, 1);
        const Vector vac = oracle.flavor_vacuum();
        REQUIRE(std::abs(vac.norm() - 1.0) < 1e-13);
        REQUIRE((oracle.alpha(Flavor::electron, 0.0) * vac).norm() < 1e-13);
        REQUIRE((oracle.alpha(Flavor::muon, 0.0) * vac).norm() < 1e-13);
        REQUIRE((oracle.beta(Flavor::electron, 0.0) * vac).norm() < 1e-13);
        REQUIRE((oracle.beta(Flavor::muon, 0.0) * vac).norm() < 1e-13);

        const double s2v2 = nuent::condensation_density(angle, sector);
        REQUIRE(std::abs(oracle.mass_vacuum().dot(vac).real() - (1.0 - s2v2)) < 1e-13);
        for (int mode = 0; mode < 4; ++mode) {
            REQUIRE(std::abs(
                        nuent::fock::expectation(vac, oracle.space().number(mode)).real() -
                        s2v2) < 1e-13);
        }
    }

    SECTION("flavor states: two routes agree, orthonormal, charge eigenstates") {
        const QftOracle oracle(angle, sector, 2);
        const Vector nu_e = oracle.nu(Flavor::electron);
        const Vector nu_mu = oracle.nu(Flavor::muon);
        REQUIRE((nu_e - oracle.nu_bracket(Flavor::electron)).norm() < 1e-12);
        REQUIRE((nu_mu - oracle.nu_bracket(Flavor::muon)).norm() < 1e-12);
        REQUIRE(std::abs(nu_e.norm() - 1.0) < 1e-13);
        REQUIRE(std::abs(nu_e.dot(nu_mu)) < 1e-13);

        const Matrix qe0 = oracle.charge_flavor(Flavor::electron, 0.0);
        const Matrix qm0 = oracle.charge_flavor(Flavor::muon, 0.0);
        REQUIRE((qe0 * nu_e - nu_e).norm() < 1e-12);
        REQUIRE((qm0 * nu_e).norm() < 1e-12);
        REQUIRE((qm0 * nu_mu - nu_mu).norm() < 1e-12);
        REQUIRE((qe0 * oracle.flavor_vacuum()).norm() < 1e-12);
    }

    SECTION("large momentum recovers the rotation states") {
        const KinematicSector fast(1.0, 2.0, 500.0);
        const QftOracle oracle(angle, fast, 1);
        Vector pontecorvo = angle.cos_theta() * (oracle.space().creator(0) *
                                                 oracle.mass_vacuum()) +
                            angle.sin_theta() * (oracle.space().creator(1) *
                                                 oracle.mass_vacuum());
        REQUIRE((oracle.nu(Flavor::electron) - pontecorvo).norm() < 5.0 * fast.v_k());
    }

    SECTION("su(2) ladder closure on matrices") {
        const QftOracle oracle(angle, sector, 1);
        const auto j = oracle.su2_mass(0.7);
        const Matrix plus = j[0] + Complex(0.0, 1.0) * j[1];
        const Matrix minus = j[0] - Complex(0.0, 1.0) * j[1];
        REQUIRE(nuent::fock::max_abs(
                    Matrix(nuent::fock::commutator(plus, minus) - 2.0 * j[2])) < 1e-12);
    }

    SECTION("labeled charge dispatch, unknown kinds rejected") {
        const QftOracle oracle(angle, sector, 1);
        const auto nu_e = oracle.state(nuent::oracle::StateKind::nu_e);
        const auto q1 = oracle.charge_operator(nuent::oracle::ChargeKind::mass_1, 0.0);
        REQUIRE(q1.label == "Q_1");
        REQUIRE(std::abs(nuent::fock::variance(nu_e, q1) -
                         nuent::charge_variance_static(angle)) < 1e-12);
        const auto casimir = oracle.charge_operator(nuent::oracle::ChargeKind::casimir, 0.0);
        REQUIRE(nuent::fock::max_abs(Matrix(casimir.matrix -
                                            Matrix(casimir.matrix.adjoint()))) == 0.0);
        REQUIRE_THROWS_AS(
            oracle.charge_operator(static_cast<nuent::oracle::ChargeKind>(99), 0.0),
            std::invalid_argument);
        REQUIRE_THROWS_AS(oracle.state(static_cast<nuent::oracle::StateKind>(99)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(QftOracle(angle, sector, 0), std::invalid_argument);
    }
}

TEST_CASE("four-point identity", "[fock][qft-oracle]") {
    const MixingAngle angle = MixingAngle::from_sin2(0.314);

    SECTION("vanishes without mixing or condensate") {
        const KinematicSector sector(1.0, 2.0, 1.0);
        const auto rep0 = nuent::oracle::verify_four_point_identity(MixingAngle(0.0), sector,
                                                                    1, 2.2);
        REQUIRE(std::abs(rep0.four_point) < 1e-13);
        REQUIRE(std::abs(rep0.beta_number) < 1e-13);
        const KinematicSector deg(1.1, 1.1, 0.6);
        const auto rep1 = nuent::oracle::verify_four_point_identity(angle, deg, 1, 2.2);
        REQUIRE(std::abs(rep1.four_point) < 1e-13);
        REQUIRE(std::abs(rep1.beta_number) < 1e-13);
    }

    SECTION("randomized grid") {
        std::mt19937_64 rng(37u);
        std::uniform_real_distribution<double> theta(0.0, MixingAngle::half_pi());
        std::uniform_real_distribution<double> mass(0.1, 2.5);
        std::uniform_real_distribution<double> momentum(0.0, 4.0);
        std::uniform_real_distribution<double> time(-8.0, 8.0);
        for (int n = 0; n < 40; ++n) {
            const auto rep = nuent::oracle::verify_four_point_identity(
                MixingAngle(theta(rng)),
                KinematicSector(mass(rng), mass(rng), momentum(rng)),
                1 + static_cast<int>(rng() & 1), time(rng));
            REQUIRE(rep.identity_residual < 1e-10);
            REQUIRE(rep.variance_residual < 1e-10);
        }
    }
}

TEST_CASE("mixing generator diagnostics", "[fock][qft-oracle]") {
    const MixingAngle angle = MixingAngle::from_sin2(0.314);
    const KinematicSector sector(1.0, 2.0, 1.0);
    const QftOracle oracle(angle, sector, 1);
    const Matrix g = oracle.mixing_generator();

    REQUIRE(nuent::fock::max_abs(
                Matrix(Matrix(g.adjoint()) * g - oracle.space().identity())) < 1e-12);

    const Matrix g_inv = g.adjoint();
    REQUIRE(nuent::fock::max_abs(Matrix(g_inv * oracle.a(1, 0.0) * g -
                                        oracle.alpha(Flavor::electron, 0.0))) < 1e-8);
    REQUIRE(nuent::fock::max_abs(Matrix(g_inv * oracle.b(2, 0.0) * g -
                                        oracle.beta(Flavor::muon, 0.0))) < 1e-8);

    const Vector rotated = g_inv * oracle.mass_vacuum();
    REQUIRE(std::abs(1.0 - std::abs(oracle.flavor_vacuum().dot(rotated))) < 1e-8);
    REQUIRE((rotated - oracle.flavor_vacuum()).norm() < 1e-8);
}

TEST_CASE("full verification suite passes", "[fock][verify]") {
    nuent::VerifyOptions opts;
    opts.qm_points = 40;
    opts.qft_points = 40;
    opts.algebra_points = 4;
    const auto report = nuent::run_verification(opts);
    CAPTURE(report.to_csv());
    REQUIRE(report.checks().size() > 30);
    REQUIRE(report.all_pass());
}
