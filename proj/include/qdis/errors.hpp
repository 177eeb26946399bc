#pragma once

#include <stdexcept>
#include <string>

namespace qdis {

// Base for everything this library throws, so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A density-matrix invariant failed; carries the measured deviation.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class NotHermitian final : public ValidationError {
 public:
  explicit NotHermitian(double dev)
      : ValidationError("matrix is not Hermitian (max |m - m^dag| = " +
                            std::to_string(dev) + ")",
                        dev) {}
};

class TraceDeviation final : public ValidationError {
 public:
  explicit TraceDeviation(double dev)
      : ValidationError("trace differs from 1 by " + std::to_string(dev), dev) {}
};

class NegativeEigenvalue final : public ValidationError {
 public:
  explicit NegativeEigenvalue(double eig)
      : ValidationError("matrix has negative eigenvalue " + std::to_string(eig),
                        eig) {}
};

class NotPsd final : public ValidationError {
 public:
  explicit NotPsd(double eig)
      : ValidationError("matrix is not positive semidefinite (eigenvalue " +
                            std::to_string(eig) + ")",
                        eig) {}
};

class DimensionMismatch final : public Error {
 public:
  DimensionMismatch(long a, long b)
      : Error("operands have incompatible dimensions " + std::to_string(a) +
              " and " + std::to_string(b)) {}
};

// Bloch/Pauli coefficient extraction hit a non-negligible imaginary part.
class NonRealCoefficient final : public Error {
 public:
  explicit NonRealCoefficient(double imag)
      : Error("Pauli coefficient has imaginary part " + std::to_string(imag)) {}
};

// Coefficients (r, s, T) do not describe a positive semidefinite operator.
class UnphysicalCoefficients final : public Error {
 public:
  explicit UnphysicalCoefficients(double eig)
      : Error("coefficients give negative eigenvalue " + std::to_string(eig)) {}
};

class NonUnitDirection final : public Error {
 public:
  explicit NonUnitDirection(double norm)
      : Error("direction vector has norm " + std::to_string(norm) +
              ", expected 1") {}
};

class InvalidSpec final : public Error {
 public:
  using Error::Error;
};

class EtaOutOfRange final : public Error {
 public:
  explicit EtaOutOfRange(double eta)
      : Error("reduction factor " + std::to_string(eta) +
              " outside [-1/3, 1]") {}
};

class IncompleteKrausSet final : public Error {
 public:
  explicit IncompleteKrausSet(double defect)
      : Error("Kraus operators do not resolve the identity (defect " +
              std::to_string(defect) + ")") {}
};

class InvalidProbabilities final : public Error {
 public:
  using Error::Error;
};

class DomainError final : public Error {
 public:
  using Error::Error;
};

class InvalidM final : public Error {
 public:
  explicit InvalidM(long long m)
      : Error("copy count must be a positive integer, got " +
              std::to_string(m)) {}
};

// State file could not be parsed or fails the schema.
class FileFormatError final : public Error {
 public:
  using Error::Error;
};

}  // namespace qdis
