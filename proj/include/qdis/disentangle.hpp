#pragma once

// Ideal disentanglement by dephasing the second qubit: projecting onto an
// orthonormal basis {|s>, |s_perp>} of qubit 2 always preserves the first
// qubit's reduced state, and preserves the second's exactly when the basis
// diagonalizes it. The output is classical-quantum, hence separable.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qdis/matrix.hpp"
#include "qdis/separability.hpp"

namespace qdis {

// max-entry norm of the commutator [a, b] compared against tol.
bool commuting(const QubitState& a, const QubitState& b, double tol);

// One term of a classical-quantum expansion: weight * (a x b).
struct ProductTerm {
  double weight;
  QubitState a;
  QubitState b;
};

struct DisentanglementReport {
  // Max-entry change of the first qubit's reduced state (trace over 2).
  double reduced_a_delta = 0.0;
  // Same for the second qubit (trace over 1).
  double reduced_b_delta = 0.0;
  SeparabilityVerdict verdict;
  double ic_before = 0.0;
  double ic_after = 0.0;
  // Classical-quantum expansion of the output; weights sum to 1.
  std::vector<ProductTerm> product_weights;
};

struct DephaseResult {
  TwoQubitState state;
  DisentanglementReport report;
};

// Dephases qubit 2 in `basis` (columns = basis vectors). Defaults to the
// eigenbasis of the second reduced state, falling back to the
// computational basis when that state is degenerate.
DephaseResult dephase_disentangle(const TwoQubitState& rho,
                                  std::optional<Mat2> basis = std::nullopt);

// Ideal means: both reduced states preserved within tol and the output
// passes the separability test.
bool ideal_ok(const DisentanglementReport& report, double tol = 1e-10);

struct BatchIdealResult {
  // All pairs of second-qubit reduced states commute within tol.
  bool commuting_family = false;
  // First offending index pair when they do not.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  // One report per input state, dephased in a single shared eigenbasis
  // (filled only when the family commutes).
  std::vector<DisentanglementReport> reports;
};

BatchIdealResult batch_ideal_check(const std::vector<TwoQubitState>& states,
                                   double tol);

}  // namespace qdis
