#pragma once

// Pauli/Bloch correlation geometry: the (r, s, T) decomposition, the
// correlation strength N = tr sqrt(T T^dag) and derived quantities, the
// direct fully-entangled-fraction search, and the Bell-diagonal auxiliary
// machinery.

#include <cstddef>

#include "qdis/matrix.hpp"

namespace qdis {

// Coefficients of rho = (1/4)(I + r.sigma x I + I x s.sigma + sum t_mn
// sigma_m x sigma_n). T(m-1, n-1) holds t_mn.
struct BlochDecomposition {
  Vec3 r = Vec3::Zero();
  Vec3 s = Vec3::Zero();
  Mat3 T = Mat3::Zero();
};

enum class Region { separability_correlation, inseparability_correlation };

struct CorrelationProfile {
  // Singular values of T, descending.
  Vec3 singular_values = Vec3::Zero();
  // Canonical characteristic vector (sigma1, sigma2, sign(det T) * sigma3).
  Vec3 t_canonical = Vec3::Zero();
  // N = sigma1 + sigma2 + sigma3 (trace norm of T).
  double trace_norm = 0.0;
  // Fully entangled fraction via f = (1 + N)/4.
  double fef = 0.0;
  // Inseparability coefficient Ic = max(0, N - 1).
  double ic = 0.0;
  Region region = Region::separability_correlation;
};

// Extracts (r, s, T) by tracing against Pauli products. Coefficients must
// be real: imaginary parts above 1e-8 raise NonRealCoefficient, smaller
// ones are discarded.
BlochDecomposition decompose(const TwoQubitState& rho);

// Rebuilds the density matrix from coefficients; UnphysicalCoefficients if
// the result is not PSD at tol.
TwoQubitState recompose(const BlochDecomposition& d, double tol = kDefaultTol);

// (a, T b) for unit vectors a, b; NonUnitDirection if either norm is off
// by more than 1e-9.
double correlation_value(const BlochDecomposition& d, const Vec3& a,
                         const Vec3& b);

// Canonical characteristic vector of an arbitrary real 3x3 matrix.
Vec3 characteristic_vector(const Mat3& T);

CorrelationProfile profile(const TwoQubitState& rho);

// Maximum of <e| rho |e> over maximally entangled |e> = (U x I)|Phi+>,
// searched over the three SU(2) angles: full coarse grid, then simplex
// refinement, spending at least `budget` evaluations. Deterministic.
double fef_direct(const TwoQubitState& rho, std::size_t budget = 100000);

// State with the same T but r = s = 0; UnphysicalCoefficients if that
// operator is not PSD (never the case for coefficients of a valid state).
TwoQubitState bell_auxiliary(const TwoQubitState& rho);

// Entanglement of formation of a Bell-diagonal state from its largest
// eigenvalue f: 0 for f < 1/2, else the binary entropy of
// 1/2 + sqrt(f(1-f)). DomainError outside [0, 1].
double bell_diag_eof(double f);

}  // namespace qdis
