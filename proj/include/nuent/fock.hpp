#pragma once

// Exact second quantization on a small fermionic Fock space. Mode operators
// are dense matrices built by the Jordan-Wigner construction
//   a_j = Z (x) ... (x) Z (x) sigma^- (x) 1 (x) ...
// realized directly on occupation bitstrings (bit j of a basis index is the
// occupation of mode j). Everything downstream treats these matrices as
// ground truth.

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nuent::fock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Species { particle, antiparticle };

struct ModeLabel {
    Species species;
    int mass_index;  // 1 or 2
    int helicity;    // r = 1 or 2

    std::string name() const {
        return std::string(species == Species::particle ? "a" : "b") +
               std::to_string(mass_index) + "_r" + std::to_string(helicity);
    }
};

class FockSpace {
public:
    explicit FockSpace(std::vector<ModeLabel> labels) : labels_(std::move(labels)) {
        const int n = static_cast<int>(labels_.size());
        if (n < 1 || n > 12) {
            throw std::invalid_argument("FockSpace: mode count must lie in [1, 12]");
        }
        dim_ = Eigen::Index(1) << n;
        annihilators_.reserve(labels_.size());
        for (int j = 0; j < n; ++j) {
            Matrix a = Matrix::Zero(dim_, dim_);
            const std::uint64_t mask = std::uint64_t(1) << j;
            for (std::uint64_t ket = 0; ket < std::uint64_t(dim_); ++ket) {
                if (!(ket & mask)) continue;
                const int parity = std::popcount(ket & (mask - 1));
                a(static_cast<Eigen::Index>(ket ^ mask), static_cast<Eigen::Index>(ket)) =
                    (parity & 1) ? -1.0 : 1.0;
            }
            annihilators_.push_back(std::move(a));
        }
    }

    int n_modes() const { return static_cast<int>(labels_.size()); }
    Eigen::Index dim() const { return dim_; }
    const std::vector<ModeLabel>& labels() const { return labels_; }

    const Matrix& annihilator(int mode) const { return annihilators_.at(mode); }
    Matrix creator(int mode) const { return annihilators_.at(mode).adjoint(); }
    Matrix number(int mode) const { return creator(mode) * annihilator(mode); }
    Matrix identity() const { return Matrix::Identity(dim_, dim_); }

    Vector vacuum() const {
        Vector v = Vector::Zero(dim_);
        v(0) = 1.0;
        return v;
    }

private:
    std::vector<ModeLabel> labels_;
    Eigen::Index dim_ = 0;
    std::vector<Matrix> annihilators_;
};

// Dense operator with a provenance tag, for report-friendly plumbing.
struct FockOperator {
    Matrix matrix;
    std::string label;
};

struct FockState {
    Vector vector;
    std::string label;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Scalar part of an anticommutator that is proportional to the identity;
// residual from the identity multiple is the caller's consistency check.
inline Complex scalar_part(const Matrix& m) { return m(0, 0); }

inline Complex expectation(const Vector& state, const Matrix& op) {
    if (state.size() != op.rows() || op.rows() != op.cols()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    return state.dot(op * state);  // Eigen's dot conjugates the left factor
}

inline Complex expectation(const FockState& state, const FockOperator& op) {
    return expectation(state.vector, op.matrix);
}

// <A^2> - <A>^2. Real for Hermitian A; tiny negative values (>= -1e-12) are
// roundoff from the subtraction.
inline double variance(const Vector& state, const Matrix& op) {
    const Complex mean = expectation(state, op);
    const Complex second = expectation(state, Matrix(op * op));
    return (second - mean * mean).real();
}

inline double variance(const FockState& state, const FockOperator& op) {
    return variance(state.vector, op.matrix);
}

// Occupation-basis reduction of a pure state: keep the listed modes, trace
// the rest. This is the mode-entanglement (qubit) reduction, taken directly
// in the Jordan-Wigner occupation basis.
inline Matrix reduced_density(const Vector& state, int n_modes, const std::vector<int>& keep) {
    if (state.size() != (Eigen::Index(1) << n_modes)) {
        throw std::invalid_argument("reduced_density: state dimension mismatch");
    }
    std::vector<int> traced;
    std::vector<bool> kept(n_modes, false);
    for (int m : keep) {
        if (m < 0 || m >= n_modes) throw std::invalid_argument("reduced_density: bad mode index");
        kept[m] = true;
    }
    for (int m = 0; m < n_modes; ++m) {
        if (!kept[m]) traced.push_back(m);
    }

    const auto expand = [](const std::vector<int>& modes, std::uint64_t packed) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < modes.size(); ++i) {
            if (packed >> i & 1) idx |= std::uint64_t(1) << modes[i];
        }
        return idx;
    };

    const Eigen::Index keep_dim = Eigen::Index(1) << keep.size();
    const Eigen::Index env_dim = Eigen::Index(1) << traced.size();
    Matrix rho = Matrix::Zero(keep_dim, keep_dim);
    for (std::uint64_t row = 0; row < std::uint64_t(keep_dim); ++row) {
        for (std::uint64_t col = 0; col < std::uint64_t(keep_dim); ++col) {
            Complex sum = 0.0;
            for (std::uint64_t env = 0; env < std::uint64_t(env_dim); ++env) {
                const std::uint64_t env_bits = expand(traced, env);
                sum += state(static_cast<Eigen::Index>(expand(keep, row) | env_bits)) *
                       std::conj(state(static_cast<Eigen::Index>(expand(keep, col) | env_bits)));
            }
            rho(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = sum;
        }
    }
    return rho;
}

// Linear entropy 2 (1 - Tr rho^2) of a reduced density matrix.
inline double linear_entropy(const Matrix& rho) {
    return 2.0 * (1.0 - (rho * rho).trace().real());
}

// exp(K) for antihermitian K via the eigendecomposition of iK. Throws if the
// kernel is not antihermitian to tolerance.
inline Matrix exp_antihermitian(const Matrix& kernel, double tol = 1e-12) {
    if (max_abs(Matrix(kernel + kernel.adjoint())) > tol) {
        throw std::invalid_argument("exp_antihermitian: kernel is not antihermitian");
    }
    const Matrix h = Complex(0.0, 1.0) * kernel;  // Hermitian
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    const auto& evals = solver.eigenvalues();
    const Matrix& vecs = solver.eigenvectors();
    Vector phases(evals.size());
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        phases(i) = std::exp(Complex(0.0, -evals(i)));
    }
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

}  // namespace nuent::fock
