#pragma once

// Deterministic, cross-platform random sampling. mt19937_64 output is fully
// specified by the standard; the distribution transforms are written out
// explicitly because the std:: distributions are implementation-defined.

#include <cstdint>
#include <random>

#include "qdis/matrix.hpp"

namespace qdis {

// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller (one value per call; no cached spare, so
// the stream position is a simple function of the call count).
double gaussian(std::mt19937_64& rng);

// Complex standard normal (independent real and imaginary parts).
complex gaussian_complex(std::mt19937_64& rng);

// Haar-distributed 2x2 unitary (QR of a complex Gaussian matrix with the
// phase convention fixed by a positive real diagonal of R).
Mat2 haar_unitary2(std::mt19937_64& rng);

}  // namespace qdis
