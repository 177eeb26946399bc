#pragma once

// Local disentangling channels. The isotropic (depolarizing-type) channel
// shrinks the Bloch vector by a reduction factor eta; applied to both
// qubits with factors eta1, eta2 it maps (r, s, T) to
// (eta1 r, eta2 s, eta1 eta2 T). The product eta1 * eta2 <= 1/3 is exactly
// the condition under which every two-qubit state comes out separable.

#include <vector>

#include "qdis/matrix.hpp"

namespace qdis {

// Operator-sum representation. completeness_defect is the max-entry
// deviation of sum K^dag K from the identity; applying a set with defect
// above 1e-10 raises IncompleteKrausSet.
struct KrausSet {
  std::vector<Mat2> operators;
  double completeness_defect = 0.0;
};

KrausSet make_kraus_set(std::vector<Mat2> operators);

// Isotropic channel with reduction factor eta in [-1/3, 1]:
// weights (1+3eta)/4 on the identity and (1-eta)/4 on each Pauli.
KrausSet isotropic_kraus(double eta);

// Convex mixture of Pauli conjugations; probabilities must be nonnegative
// and sum to 1 within 1e-12 (InvalidProbabilities otherwise).
struct PauliMixture {
  PauliMixture(double p0, double p1, double p2, double p3);
  double p0, p1, p2, p3;
};

KrausSet pauli_mixture_kraus(const PauliMixture& p);

// Diagonal of the Bloch-vector map of a Pauli mixture (the shift is zero).
Vec3 pauli_mixture_bloch_diag(const PauliMixture& p);

// rho -> sum_k K rho K^dag.
QubitState apply_channel(const KrausSet& k, const QubitState& rho);

// Two-sided local action (A_i x B_j) rho (A_i x B_j)^dag summed over pairs.
TwoQubitState apply_local(const TwoQubitState& rho, const KrausSet& a,
                          const KrausSet& b);

// Mean reduction factor (eta1 + eta2)/2: how much local structure survives.
double quality_factor(double eta1, double eta2);

// eta1 * eta2 <= 1/3 (+1e-12 slack): guaranteed disentanglement.
bool threshold_ok(double eta1, double eta2);

// Smallest-eigenvalue margin of the partial transpose after the two-sided
// isotropic channel on cos(theta)|00> + sin(theta)|11>, in closed form
// (scaled by 16; positive iff separable). With s = cos 2theta,
// t = sin 2theta, p = eta1 eta2:
//   [1 - p + (eta1-eta2) s][1 - p - (eta1-eta2) s] - 4 p^2 t^2
double analytic_ppt_margin(double theta, double eta1, double eta2);

// Minimum of the margin over a uniform theta grid on [0, pi/2]
// (theta_steps points, endpoints included; theta_steps >= 2).
double worst_case_margin(double eta1, double eta2, int theta_steps);

// One grid point of the threshold sweep. ppt_all_theta is the numerical
// route (apply the channel, partially transpose, diagonalize, for every
// theta); threshold_predict is the analytic rule eta1 eta2 <= 1/3.
struct SweepRow {
  double eta1 = 0.0;
  double eta2 = 0.0;
  double product = 0.0;
  double worst_margin = 0.0;
  bool ppt_all_theta = false;
  bool threshold_predict = false;
  bool agree = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by eta1, then eta2
  // Rows with ppt_all_theta != threshold_predict whose product is at least
  // 1e-3 away from the 1/3 boundary.
  int disagreements_outside_band = 0;
};

// Uniform eta grids on [0, 1] (eta_steps points per axis, >= 2) crossed
// with a theta grid (theta_steps points, >= 2).
SweepResult threshold_sweep(int eta_steps, int theta_steps);

}  // namespace qdis
