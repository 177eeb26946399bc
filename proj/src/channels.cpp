#include "qdis/channels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qdis/separability.hpp"
#include "qdis/states.hpp"

namespace qdis {

namespace {

constexpr double kCompletenessTol = 1e-10;

double completeness_defect(const std::vector<Mat2>& ops) {
  Mat2 sum = Mat2::Zero();
  for (const Mat2& k : ops) sum += k.adjoint() * k;
  return (sum - Mat2::Identity()).cwiseAbs().maxCoeff();
}

void check_complete(const KrausSet& k) {
  if (k.completeness_defect > kCompletenessTol)
    throw IncompleteKrausSet(k.completeness_defect);
}

}  // namespace

KrausSet make_kraus_set(std::vector<Mat2> operators) {
  KrausSet k;
  k.completeness_defect = completeness_defect(operators);
  k.operators = std::move(operators);
  return k;
}

KrausSet isotropic_kraus(double eta) {
  if (!(eta >= -1.0 / 3.0 - 1e-15 && eta <= 1.0 + 1e-15))
    throw EtaOutOfRange(eta);
  const double w_id = (1.0 + 3.0 * eta) / 4.0;
  const double w_pauli = (1.0 - eta) / 4.0;
  std::vector<Mat2> ops;
  ops.push_back(std::sqrt(std::max(w_id, 0.0)) * id2());
  for (int axis = 1; axis <= 3; ++axis)
    ops.push_back(std::sqrt(std::max(w_pauli, 0.0)) * pauli(axis));
  return make_kraus_set(std::move(ops));
}

PauliMixture::PauliMixture(double q0, double q1, double q2, double q3)
    : p0(q0), p1(q1), p2(q2), p3(q3) {
  for (double q : {q0, q1, q2, q3})
    if (!(q >= 0.0))
      throw InvalidProbabilities("mixture weight " + std::to_string(q) +
                                 " is negative");
  const double sum = q0 + q1 + q2 + q3;
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvalidProbabilities("mixture weights sum to " +
                               std::to_string(sum));
}

KrausSet pauli_mixture_kraus(const PauliMixture& p) {
  std::vector<Mat2> ops;
  ops.push_back(std::sqrt(p.p0) * id2());
  ops.push_back(std::sqrt(p.p1) * sigma_x());
  ops.push_back(std::sqrt(p.p2) * sigma_y());
  ops.push_back(std::sqrt(p.p3) * sigma_z());
  return make_kraus_set(std::move(ops));
}

Vec3 pauli_mixture_bloch_diag(const PauliMixture& p) {
  // Conjugation by sigma_k flips the two orthogonal Bloch components.
  return Vec3(p.p0 + p.p1 - p.p2 - p.p3, p.p0 - p.p1 + p.p2 - p.p3,
              p.p0 - p.p1 - p.p2 + p.p3);
}

QubitState apply_channel(const KrausSet& k, const QubitState& rho) {
  check_complete(k);
  Mat2 out = Mat2::Zero();
  for (const Mat2& op : k.operators) out += op * rho.matrix() * op.adjoint();
  return QubitState(out, rho.tol());
}

TwoQubitState apply_local(const TwoQubitState& rho, const KrausSet& a,
                          const KrausSet& b) {
  check_complete(a);
  check_complete(b);
  Mat4 out = Mat4::Zero();
  for (const Mat2& ka : a.operators)
    for (const Mat2& kb : b.operators) {
      const Mat4 op = kron(ka, kb);
      out += op * rho.matrix() * op.adjoint();
    }
  return TwoQubitState(out, rho.tol());
}

double quality_factor(double eta1, double eta2) {
  return 0.5 * (eta1 + eta2);
}

bool threshold_ok(double eta1, double eta2) {
  return eta1 * eta2 <= 1.0 / 3.0 + 1e-12;
}

double analytic_ppt_margin(double theta, double eta1, double eta2) {
  const double s = std::cos(2.0 * theta);
  const double t = std::sin(2.0 * theta);
  const double p = eta1 * eta2;
  const double d = (eta1 - eta2) * s;
  return (1.0 - p + d) * (1.0 - p - d) - 4.0 * p * p * t * t;
}

double worst_case_margin(double eta1, double eta2, int theta_steps) {
  if (theta_steps < 2)
    throw DomainError("theta grid needs at least 2 points");
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < theta_steps; ++i) {
    const double theta =
        std::numbers::pi / 2.0 * i / (theta_steps - 1.0);
    worst = std::min(worst, analytic_ppt_margin(theta, eta1, eta2));
  }
  return worst;
}

SweepResult threshold_sweep(int eta_steps, int theta_steps) {
  if (eta_steps < 2 || theta_steps < 2)
    throw DomainError("sweep grids need at least 2 points per axis");
  SweepResult result;
  result.rows.reserve(static_cast<std::size_t>(eta_steps) * eta_steps);
  for (int i = 0; i < eta_steps; ++i) {
    const double eta1 = static_cast<double>(i) / (eta_steps - 1.0);
    const KrausSet k1 = isotropic_kraus(eta1);
    for (int j = 0; j < eta_steps; ++j) {
      const double eta2 = static_cast<double>(j) / (eta_steps - 1.0);
      const KrausSet k2 = isotropic_kraus(eta2);

      SweepRow row;
      row.eta1 = eta1;
      row.eta2 = eta2;
      row.product = eta1 * eta2;
      row.worst_margin = worst_case_margin(eta1, eta2, theta_steps);
      row.threshold_predict = threshold_ok(eta1, eta2);

      row.ppt_all_theta = true;
      for (int k = 0; k < theta_steps && row.ppt_all_theta; ++k) {
        const double theta =
            std::numbers::pi / 2.0 * k / (theta_steps - 1.0);
        const TwoQubitState in = make_state(StateSpec::schmidt(theta));
        const TwoQubitState out = apply_local(in, k1, k2);
        if (ppt_verdict(out).verdict == Verdict::entangled)
          row.ppt_all_theta = false;
      }

      row.agree = row.ppt_all_theta == row.threshold_predict;
      if (!row.agree && std::abs(row.product - 1.0 / 3.0) >= 1e-3)
        ++result.disagreements_outside_band;
      result.rows.push_back(row);
    }
  }
  return result;
}

}  // namespace qdis
