#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dirsym {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Residual and rank decisions; built-in models have entries in {0, ±1, ±i}
// so results sit far from this edge.
inline constexpr double kDefaultTol = 1e-10;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kronecker product, (a ⊗ b)[i·nb + k, j·nb + l] = a[i,j]·b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Orthonormal basis of the numerical nullspace of a (possibly rectangular)
/// matrix. Singular values at or below tol·σ_max are treated as zero; a zero
/// matrix has full nullity.
std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol = kDefaultTol);

bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& m);

bool is_power_of_two(Eigen::Index n);

// Column-major vec(X) and its inverse.
ComplexVector vectorize(const ComplexMatrix& m);
ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index n);

/// Scalar c with a ≈ c·b (least squares), if ‖a − c·b‖_max ≤ tol·max(1, ‖a‖_max).
std::optional<Complex> proportionality(const ComplexMatrix& a, const ComplexMatrix& b,
                                       double tol = kDefaultTol);

/// Hermitian matrix exponential exp(i·t·h) via eigendecomposition.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h, double t);

ComplexMatrix identity(Eigen::Index n);

} // namespace dirsym
