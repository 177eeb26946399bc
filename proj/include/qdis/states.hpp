#pragma once

// Canonical and random two-qubit state construction.

#include <cstdint>

#include "qdis/matrix.hpp"

namespace qdis {

// Recipe for a state. Only the parameters relevant to `kind` are read:
//   bell           -> bell_index in {0: Phi+, 1: Phi-, 2: Psi+, 3: Psi-}
//   schmidt        -> theta in [0, pi/2]: cos(theta)|00> + sin(theta)|11>
//   werner         -> p in [0, 1]: p |Phi+><Phi+| + (1-p) I/4
//   random_pure    -> seed: Haar-uniform pure state
//   random_mixed   -> seed: G G^dag / tr, G a 4x4 complex Gaussian
//   random_product -> seed: tensor product of two random mixed qubits
// Construction is deterministic per (kind, parameters, seed).
struct StateSpec {
  enum class Kind {
    bell,
    schmidt,
    werner,
    random_pure,
    random_mixed,
    random_product
  };

  Kind kind = Kind::bell;
  int bell_index = 0;
  double theta = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;

  static StateSpec bell(int index);
  static StateSpec schmidt(double theta);
  static StateSpec werner(double p);
  static StateSpec random_pure(std::uint64_t seed);
  static StateSpec random_mixed(std::uint64_t seed);
  static StateSpec random_product(std::uint64_t seed);
};

// Builds the state described by `spec`; throws InvalidSpec when a parameter
// is outside its documented range.
TwoQubitState make_state(const StateSpec& spec);

}  // namespace qdis
