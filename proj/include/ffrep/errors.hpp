#pragma once

#include <stdexcept>
#include <string>

namespace ffrep {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct InsufficientPrecision : Error {
  explicit InsufficientPrecision(const std::string& m) : Error("insufficient precision: " + m) {}
};
struct ZeroDivision : Error {
  explicit ZeroDivision(const std::string& m) : Error("division by zero: " + m) {}
};
struct NotMonic : Error {
  explicit NotMonic(const std::string& m) : Error("not monic: " + m) {}
};
struct Unsupported : Error {
  explicit Unsupported(const std::string& m) : Error("unsupported: " + m) {}
};
struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& m) : Error("singular matrix: " + m) {}
};
struct PointOnBoundary : Error {
  explicit PointOnBoundary(const std::string& m) : Error("point on boundary: " + m) {}
};
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& m) : Error("not invertible: " + m) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error("config error: " + m) {}
};
struct UnknownCheck : Error {
  explicit UnknownCheck(const std::string& m) : Error("unknown check: " + m) {}
};
struct RandomnessExhausted : Error {
  explicit RandomnessExhausted(const std::string& m) : Error("randomness exhausted: " + m) {}
};

}  // namespace ffrep
