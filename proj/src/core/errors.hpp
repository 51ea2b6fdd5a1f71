#pragma once

#include <stdexcept>
#include <string>

namespace duopoly {

enum class ErrorCode {
  invalid_argument,
  row_sum,
  diagonal,
  negative_weight,
  size,
  bounds,
  capacity,
  regime,
  parse,
  io,
  solve,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct RowSumError : Error {
  explicit RowSumError(const std::string& w) : Error(ErrorCode::row_sum, w) {}
};
struct DiagonalError : Error {
  explicit DiagonalError(const std::string& w) : Error(ErrorCode::diagonal, w) {}
};
struct NegativeWeightError : Error {
  explicit NegativeWeightError(const std::string& w)
      : Error(ErrorCode::negative_weight, w) {}
};
struct SizeError : Error {
  explicit SizeError(const std::string& w) : Error(ErrorCode::size, w) {}
};
struct BoundsError : Error {
  explicit BoundsError(const std::string& w) : Error(ErrorCode::bounds, w) {}
};
struct CapacityError : Error {
  explicit CapacityError(const std::string& w) : Error(ErrorCode::capacity, w) {}
};
struct RegimeError : Error {
  explicit RegimeError(const std::string& w) : Error(ErrorCode::regime, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::parse, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::io, w) {}
};
struct SolveError : Error {
  explicit SolveError(const std::string& w) : Error(ErrorCode::solve, w) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& w)
      : Error(ErrorCode::invalid_argument, w) {}
};

}  // namespace duopoly
