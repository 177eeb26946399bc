#include "qdis/states.hpp"

#include <cmath>
#include <numbers>

#include "qdis/random.hpp"

namespace qdis {

double gaussian(std::mt19937_64& rng) {
  // Box-Muller; u is kept away from 0 so the log is finite.
  const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  const double v = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(2.0 * std::numbers::pi * v);
}

complex gaussian_complex(std::mt19937_64& rng) {
  const double re = gaussian(rng);
  const double im = gaussian(rng);
  return {re, im};
}

Mat2 haar_unitary2(std::mt19937_64& rng) {
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = gaussian_complex(rng);
  // Gram-Schmidt with R's diagonal made positive real, which is the
  // phase convention under which QR of a Ginibre matrix is Haar.
  Eigen::Vector2cd q0 = g.col(0) / g.col(0).norm();
  Eigen::Vector2cd c1 = g.col(1) - q0 * (q0.adjoint() * g.col(1))(0);
  Eigen::Vector2cd q1 = c1 / c1.norm();
  const complex r00 = (q0.adjoint() * g.col(0))(0);
  const complex r11 = (q1.adjoint() * c1)(0);
  Mat2 u;
  u.col(0) = q0 * (r00 / std::abs(r00));
  u.col(1) = q1 * (r11 / std::abs(r11));
  return u;
}

namespace {

Eigen::Vector4cd bell_vector(int index) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (index) {
    case 0:  // Phi+ = (|00> + |11>)/sqrt2
      v(0) = inv_sqrt2;
      v(3) = inv_sqrt2;
      break;
    case 1:  // Phi- = (|00> - |11>)/sqrt2
      v(0) = inv_sqrt2;
      v(3) = -inv_sqrt2;
      break;
    case 2:  // Psi+ = (|01> + |10>)/sqrt2
      v(1) = inv_sqrt2;
      v(2) = inv_sqrt2;
      break;
    case 3:  // Psi- = (|01> - |10>)/sqrt2
      v(1) = inv_sqrt2;
      v(2) = -inv_sqrt2;
      break;
    default:
      throw InvalidSpec("bell index must be 0..3, got " +
                        std::to_string(index));
  }
  return v;
}

Mat4 schmidt_matrix(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + 1e-12))
    throw InvalidSpec("schmidt angle must lie in [0, pi/2], got " +
                      std::to_string(theta));
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(0) = std::cos(theta);
  v(3) = std::sin(theta);
  return v * v.adjoint();
}

Mat4 werner_matrix(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidSpec("werner weight must lie in [0, 1], got " +
                      std::to_string(p));
  const Eigen::Vector4cd phi = bell_vector(0);
  return p * (phi * phi.adjoint()).eval() + (1.0 - p) / 4.0 * Mat4::Identity();
}

Mat4 random_pure_matrix(std::mt19937_64& rng) {
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v(i) = gaussian_complex(rng);
  v /= v.norm();
  return v * v.adjoint();
}

Mat2 random_mixed_qubit(std::mt19937_64& rng) {
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = gaussian_complex(rng);
  Mat2 m = g * g.adjoint();
  return m / m.trace().real();
}

Mat4 random_mixed_matrix(std::mt19937_64& rng) {
  Mat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = gaussian_complex(rng);
  Mat4 m = g * g.adjoint();
  return m / m.trace().real();
}

}  // namespace

StateSpec StateSpec::bell(int index) {
  StateSpec s;
  s.kind = Kind::bell;
  s.bell_index = index;
  return s;
}

StateSpec StateSpec::schmidt(double theta) {
  StateSpec s;
  s.kind = Kind::schmidt;
  s.theta = theta;
  return s;
}

StateSpec StateSpec::werner(double p) {
  StateSpec s;
  s.kind = Kind::werner;
  s.p = p;
  return s;
}

StateSpec StateSpec::random_pure(std::uint64_t seed) {
  StateSpec s;
  s.kind = Kind::random_pure;
  s.seed = seed;
  return s;
}

StateSpec StateSpec::random_mixed(std::uint64_t seed) {
  StateSpec s;
  s.kind = Kind::random_mixed;
  s.seed = seed;
  return s;
}

StateSpec StateSpec::random_product(std::uint64_t seed) {
  StateSpec s;
  s.kind = Kind::random_product;
  s.seed = seed;
  return s;
}

TwoQubitState make_state(const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::bell: {
      const Eigen::Vector4cd v = bell_vector(spec.bell_index);
      return TwoQubitState(v * v.adjoint());
    }
    case StateSpec::Kind::schmidt:
      return TwoQubitState(schmidt_matrix(spec.theta));
    case StateSpec::Kind::werner:
      return TwoQubitState(werner_matrix(spec.p));
    case StateSpec::Kind::random_pure: {
      std::mt19937_64 rng(spec.seed);
      return TwoQubitState(random_pure_matrix(rng));
    }
    case StateSpec::Kind::random_mixed: {
      std::mt19937_64 rng(spec.seed);
      return TwoQubitState(random_mixed_matrix(rng));
    }
    case StateSpec::Kind::random_product: {
      std::mt19937_64 rng(spec.seed);
      const Mat2 a = random_mixed_qubit(rng);
      const Mat2 b = random_mixed_qubit(rng);
      return TwoQubitState(kron(a, b));
    }
  }
  throw InvalidSpec("unknown state kind");
}

}  // namespace qdis
