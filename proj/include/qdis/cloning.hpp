#pragma once

// Disentanglement via symmetric cloning. An optimal M-copy cloner shrinks
// the Bloch sphere by (M+2)/(3M) per qubit; a nonlocal cloner acting on the
// pair shrinks T by (M+4)/(5M). Meeting the guaranteed-disentanglement
// threshold means driving the net T shrink to at most 1/3, which these
// exact rational bounds settle per mode.

#include <cstdint>
#include <optional>

#include "qdis/errors.hpp"

namespace qdis {

// Exact fraction with the usual normalized invariants (gcd 1, den > 0).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  bool operator<=(const Rational& o) const;
  bool operator<(const Rational& o) const;
  double to_double() const;
};

enum class CloningMode {
  // Each qubit cloned separately with M copies: T shrinks by eta^2.
  local_symmetric,
  // Only one qubit cloned: T shrinks by eta.
  local_single,
  // One cloner on the pair: T shrinks by eta'.
  nonlocal
};

// Reduction factor of one cloning step: (M+2)/(3M) for the local modes,
// (M+4)/(5M) for the nonlocal one. InvalidM for m < 1.
Rational clone_eta(CloningMode mode, long long m);

// Net shrink applied to T by the whole scheme.
Rational net_shrink(CloningMode mode, long long m);

struct MinCopies {
  // Smallest copy count whose net shrink is <= 1/3; empty when no finite
  // count works.
  std::optional<int> copies;
  // Greatest lower bound of the net shrink over all copy counts (reported
  // for the unattainable mode, where it equals exactly 1/3).
  Rational infimum;
};

MinCopies min_copies(CloningMode mode);

}  // namespace qdis
