#include "qdis/separability.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "qdis/correlation.hpp"

namespace qdis {

namespace {
// Entanglement detection threshold on the smallest PT eigenvalue.
constexpr double kPtTol = 1e-10;
}  // namespace

SeparabilityVerdict ppt_verdict(const TwoQubitState& rho) {
  const Mat4 pt = partial_transpose(rho, Subsystem::second);
  const std::vector<double> ev = eig_hermitian(pt);
  SeparabilityVerdict v;
  v.min_pt_eigenvalue = ev.front();
  v.negativity_margin = std::max(0.0, -v.min_pt_eigenvalue);
  v.verdict = v.min_pt_eigenvalue < -kPtTol ? Verdict::entangled
                                            : Verdict::separable;
  return v;
}

bool is_product(const TwoQubitState& rho, double tol) {
  const Mat2 a = partial_trace_matrix(rho.matrix(), Subsystem::first);
  const Mat2 b = partial_trace_matrix(rho.matrix(), Subsystem::second);
  const double dev = (rho.matrix() - kron(a, b)).cwiseAbs().maxCoeff();
  return dev <= tol;
}

double det_m(const TwoQubitState& rho) {
  const BlochDecomposition d = decompose(rho);
  Eigen::JacobiSVD<Mat3> svd(d.T);
  return svd.singularValues().prod();
}

}  // namespace qdis
