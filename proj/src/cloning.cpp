#include "qdis/cloning.hpp"

#include <numeric>

namespace qdis {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

bool Rational::operator<=(const Rational& o) const {
  return num * o.den <= o.num * den;
}

bool Rational::operator<(const Rational& o) const {
  return num * o.den < o.num * den;
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

Rational clone_eta(CloningMode mode, long long m) {
  if (m < 1) throw InvalidM(m);
  if (mode == CloningMode::nonlocal) return Rational(m + 4, 5 * m);
  return Rational(m + 2, 3 * m);
}

Rational net_shrink(CloningMode mode, long long m) {
  const Rational eta = clone_eta(mode, m);
  return mode == CloningMode::local_symmetric ? eta * eta : eta;
}

MinCopies min_copies(CloningMode mode) {
  const Rational threshold(1, 3);
  switch (mode) {
    case CloningMode::local_symmetric:
      // ((M+2)/(3M))^2 decreases toward 1/9; first crossing is small.
      for (int m = 1; m <= 64; ++m)
        if (net_shrink(mode, m) <= threshold)
          return {m, Rational(1, 9)};
      break;
    case CloningMode::nonlocal:
      // (M+4)/(5M) decreases toward 1/5; hits exactly 1/3 at M = 6.
      for (int m = 1; m <= 64; ++m)
        if (net_shrink(mode, m) <= threshold)
          return {m, Rational(1, 5)};
      break;
    case CloningMode::local_single:
      // (M+2)/(3M) = 1/3 + 2/(3M) > 1/3 for every finite M: unattainable,
      // with infimum exactly 1/3.
      return {std::nullopt, threshold};
  }
  return {std::nullopt, threshold};
}

}  // namespace qdis
