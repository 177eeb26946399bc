#pragma once

// Exact separability tests for two qubits: the partial-transpose criterion
// (necessary and sufficient in 2x2), a product-state check, and the
// T-matrix determinant invariant.

#include "qdis/matrix.hpp"

namespace qdis {

enum class Verdict { separable, entangled };

struct SeparabilityVerdict {
  Verdict verdict = Verdict::separable;
  // Smallest eigenvalue of the partial transpose.
  double min_pt_eigenvalue = 0.0;
  // max(0, -min_pt_eigenvalue); positive exactly for entangled states.
  double negativity_margin = 0.0;
};

// Partial transpose on the second qubit, eigenvalues, verdict. The verdict
// flips to entangled when the smallest eigenvalue is below -1e-10; both
// subsystem choices give the same spectrum.
SeparabilityVerdict ppt_verdict(const TwoQubitState& rho);

// True when rho equals the tensor product of its own reduced states within
// tol (max-entry norm).
bool is_product(const TwoQubitState& rho, double tol = kDefaultTol);

// Product of the singular values of T, i.e. |det T|; zero (up to noise)
// for product states.
double det_m(const TwoQubitState& rho);

}  // namespace qdis
