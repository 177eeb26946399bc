#pragma once

// Core two-qubit linear algebra: validated density-matrix types, Pauli
// constants, tensor/partial-trace/partial-transpose operations, Hermitian
// eigenvalues, PSD square root, and Uhlmann fidelity.
//
// Conventions (fixed across the whole library):
//   - two-qubit basis order |00>, |01>, |10>, |11>, row-major
//   - qubit 1 is the left tensor factor, qubit 2 the right
//   - eigenvalues are returned ascending

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "qdis/errors.hpp"

namespace qdis {

using complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kDefaultTol = 1e-9;

// Pauli matrices and identities.
const Mat2& sigma_x();
const Mat2& sigma_y();
const Mat2& sigma_z();
const Mat2& id2();
const Mat4& id4();
// axis = 1, 2, 3 for x, y, z.
const Mat2& pauli(int axis);

enum class Subsystem { first, second };

// Single-qubit density matrix, validated on construction: Hermitian, unit
// trace, and positive semidefinite, each within tol. Throws NotHermitian,
// TraceDeviation, or NegativeEigenvalue with the measured deviation.
class QubitState {
 public:
  explicit QubitState(const Mat2& m, double tol = kDefaultTol);
  const Mat2& matrix() const { return m_; }
  double tol() const { return tol_; }

 private:
  Mat2 m_;
  double tol_;
};

// Two-qubit density matrix with the same validation contract.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Mat4& m, double tol = kDefaultTol);
  const Mat4& matrix() const { return m_; }
  double tol() const { return tol_; }

 private:
  Mat4 m_;
  double tol_;
};

// Kronecker product with qubit `a` as the left factor.
Mat4 kron(const Mat2& a, const Mat2& b);
TwoQubitState tensor_product(const QubitState& a, const QubitState& b);

// Trace out the complement of `keep`.
QubitState partial_trace(const TwoQubitState& rho, Subsystem keep);
Mat2 partial_trace_matrix(const Mat4& m, Subsystem keep);

// Transpose the indices of one subsystem. The result is Hermitian and
// unit-trace but in general not PSD, hence a plain matrix.
Mat4 partial_transpose(const Mat4& m, Subsystem which);
Mat4 partial_transpose(const TwoQubitState& rho, Subsystem which);

// Ascending eigenvalues of a Hermitian matrix (any square size).
// Throws NotHermitian if max |m - m^dag| exceeds 1e-9.
std::vector<double> eig_hermitian(const Eigen::MatrixXcd& m);

// Principal square root of a PSD Hermitian matrix. Eigenvalues in
// [-tol, 0) are clamped to zero; below -tol throws NotPsd.
Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

// Uhlmann fidelity F(rho, sigma) = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
// Symmetric in its arguments up to numerical noise; 1 iff the states match.
double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);
double fidelity(const QubitState& rho, const QubitState& sigma);
double fidelity(const TwoQubitState& rho, const TwoQubitState& sigma);

}  // namespace qdis
