#include "qdis/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qdis {

namespace {

constexpr complex kI{0.0, 1.0};

Mat2 make_sigma_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 make_sigma_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 make_sigma_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

// Shared validation: Hermitian, then unit trace, then PSD, each at tol.
void check_density_matrix(const Eigen::MatrixXcd& m, double tol) {
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol) throw NotHermitian(herm_dev);
  const double trace_dev = std::abs(m.trace() - complex(1.0));
  if (trace_dev > tol) throw TraceDeviation(trace_dev);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol) throw NegativeEigenvalue(min_eig);
}

}  // namespace

const Mat2& sigma_x() {
  static const Mat2 m = make_sigma_x();
  return m;
}

const Mat2& sigma_y() {
  static const Mat2 m = make_sigma_y();
  return m;
}

const Mat2& sigma_z() {
  static const Mat2 m = make_sigma_z();
  return m;
}

const Mat2& id2() {
  static const Mat2 m = Mat2::Identity();
  return m;
}

const Mat4& id4() {
  static const Mat4 m = Mat4::Identity();
  return m;
}

const Mat2& pauli(int axis) {
  switch (axis) {
    case 1:
      return sigma_x();
    case 2:
      return sigma_y();
    case 3:
      return sigma_z();
    default:
      throw DomainError("Pauli axis must be 1, 2, or 3");
  }
}

QubitState::QubitState(const Mat2& m, double tol) : m_(m), tol_(tol) {
  check_density_matrix(m_, tol_);
}

TwoQubitState::TwoQubitState(const Mat4& m, double tol) : m_(m), tol_(tol) {
  check_density_matrix(m_, tol_);
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

TwoQubitState tensor_product(const QubitState& a, const QubitState& b) {
  return TwoQubitState(kron(a.matrix(), b.matrix()),
                       std::max(a.tol(), b.tol()));
}

Mat2 partial_trace_matrix(const Mat4& m, Subsystem keep) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (keep == Subsystem::first)
          out(i, j) += m(2 * i + k, 2 * j + k);
        else
          out(i, j) += m(2 * k + i, 2 * k + j);
      }
  return out;
}

QubitState partial_trace(const TwoQubitState& rho, Subsystem keep) {
  return QubitState(partial_trace_matrix(rho.matrix(), keep), rho.tol());
}

Mat4 partial_transpose(const Mat4& m, Subsystem which) {
  Mat4 out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) {
          if (which == Subsystem::first)
            out(2 * i1 + i2, 2 * j1 + j2) = m(2 * j1 + i2, 2 * i1 + j2);
          else
            out(2 * i1 + i2, 2 * j1 + j2) = m(2 * i1 + j2, 2 * j1 + i2);
        }
  return out;
}

Mat4 partial_transpose(const TwoQubitState& rho, Subsystem which) {
  return partial_transpose(rho.matrix(), which);
}

std::vector<double> eig_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch(m.rows(), m.cols());
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-9) throw NotHermitian(herm_dev);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch(m.rows(), m.cols());
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-9) throw NotHermitian(herm_dev);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol) throw NotPsd(ev(i));
    ev(i) = std::sqrt(std::max(ev(i), 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw DimensionMismatch(rho.rows(), sigma.rows());
  const Eigen::MatrixXcd root = sqrt_psd(rho);
  const Eigen::MatrixXcd inner = root * sigma * root;
  // inner is PSD up to roundoff; clamp stray negatives before the sqrt.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner,
                                                     Eigen::EigenvaluesOnly);
  double tr = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    tr += std::sqrt(std::max(es.eigenvalues()(i), 0.0));
  return tr * tr;
}

double fidelity(const QubitState& rho, const QubitState& sigma) {
  return fidelity(Eigen::MatrixXcd(rho.matrix()),
                  Eigen::MatrixXcd(sigma.matrix()));
}

double fidelity(const TwoQubitState& rho, const TwoQubitState& sigma) {
  return fidelity(Eigen::MatrixXcd(rho.matrix()),
                  Eigen::MatrixXcd(sigma.matrix()));
}

}  // namespace qdis
