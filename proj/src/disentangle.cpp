#include "qdis/disentangle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qdis/correlation.hpp"

namespace qdis {

namespace {

// Below this eigenvalue gap the second reduced state counts as degenerate
// and the computational basis is used instead of a numerically arbitrary
// eigenbasis.
constexpr double kDegenerateGap = 1e-12;

Mat2 eigenbasis_or_computational(const Mat2& reduced) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(reduced);
  if (es.eigenvalues()(1) - es.eigenvalues()(0) <= kDegenerateGap)
    return Mat2::Identity();
  return es.eigenvectors();
}

void check_basis(const Mat2& basis) {
  const double dev =
      (basis.adjoint() * basis - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (dev > 1e-9)
    throw DomainError("dephasing basis is not orthonormal (deviation " +
                      std::to_string(dev) + ")");
}

}  // namespace

bool commuting(const QubitState& a, const QubitState& b, double tol) {
  const Mat2 comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  return comm.cwiseAbs().maxCoeff() <= tol;
}

DephaseResult dephase_disentangle(const TwoQubitState& rho,
                                  std::optional<Mat2> basis) {
  const Mat2 reduced_b_in =
      partial_trace_matrix(rho.matrix(), Subsystem::second);
  Mat2 b = basis ? *basis : eigenbasis_or_computational(reduced_b_in);
  check_basis(b);

  // Accumulate the projected state and its classical-quantum terms. With
  // P_k = |b_k><b_k| on qubit 2, each term is A_k x P_k where A_k is the
  // partial inner product <b_k| rho |b_k> on qubit 1.
  Mat4 out = Mat4::Zero();
  DisentanglementReport report;
  for (int k = 0; k < 2; ++k) {
    const Eigen::Vector2cd bk = b.col(k).normalized();
    const Mat2 pk = bk * bk.adjoint();
    Mat2 ak = Mat2::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        complex v = 0.0;
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n)
            v += std::conj(bk(m)) * rho.matrix()(2 * i + m, 2 * j + n) *
                 bk(n);
        ak(i, j) = v;
      }
    out += kron(ak, pk);
    const double weight = ak.trace().real();
    if (weight > 1e-14)
      report.product_weights.push_back(
          {weight, QubitState(ak / weight, rho.tol()), QubitState(pk, rho.tol())});
  }

  const TwoQubitState out_state(out, rho.tol());
  report.reduced_a_delta =
      (partial_trace_matrix(out, Subsystem::first) -
       partial_trace_matrix(rho.matrix(), Subsystem::first))
          .cwiseAbs()
          .maxCoeff();
  report.reduced_b_delta =
      (partial_trace_matrix(out, Subsystem::second) - reduced_b_in)
          .cwiseAbs()
          .maxCoeff();
  report.verdict = ppt_verdict(out_state);
  report.ic_before = profile(rho).ic;
  report.ic_after = profile(out_state).ic;
  return {out_state, std::move(report)};
}

bool ideal_ok(const DisentanglementReport& report, double tol) {
  return report.reduced_a_delta <= tol && report.reduced_b_delta <= tol &&
         report.verdict.verdict == Verdict::separable;
}

BatchIdealResult batch_ideal_check(const std::vector<TwoQubitState>& states,
                                   double tol) {
  BatchIdealResult result;
  std::vector<Mat2> reduced;
  reduced.reserve(states.size());
  for (const TwoQubitState& s : states)
    reduced.push_back(partial_trace_matrix(s.matrix(), Subsystem::second));

  result.commuting_family = true;
  for (std::size_t i = 0; i < reduced.size() && result.commuting_family; ++i)
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      const Mat2 comm = reduced[i] * reduced[j] - reduced[j] * reduced[i];
      if (comm.cwiseAbs().maxCoeff() > tol) {
        result.commuting_family = false;
        result.failing_pair = {i, j};
        break;
      }
    }
  if (!result.commuting_family) return result;

  // Shared basis: eigenbasis of the first non-degenerate reduced state,
  // computational if every one of them is maximally mixed.
  Mat2 basis = Mat2::Identity();
  for (const Mat2& r : reduced) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(r);
    if (es.eigenvalues()(1) - es.eigenvalues()(0) > kDegenerateGap) {
      basis = es.eigenvectors();
      break;
    }
  }
  result.reports.reserve(states.size());
  for (const TwoQubitState& s : states)
    result.reports.push_back(dephase_disentangle(s, basis).report);
  return result;
}

}  // namespace qdis
