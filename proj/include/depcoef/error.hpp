#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace depcoef {

enum class Errc {
  NegativeEntry,
  NonFiniteEntry,
  NotNormalized,
  AllZero,
  ShapeError,
  DegenerateDistribution,
  EmptyInput,
  ParseError,
  RaggedRows,
  IoError,
  // Internal failures: a theorem or a cross-check was violated.
  BoundViolation,
  KernelMismatch,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `row()`/`col()` carry the location
/// relevant to the code: the matrix entry for NegativeEntry/NonFiniteEntry,
/// the 1-based line and field for ParseError/RaggedRows. Unused slots are 0.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::size_t row = 0, std::size_t col = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code), row_(row), col_(col) {}

  Errc code() const noexcept { return code_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

  /// True for errors that indicate a defect rather than bad input.
  bool is_internal() const noexcept {
    return code_ == Errc::BoundViolation || code_ == Errc::KernelMismatch;
  }

 private:
  Errc code_;
  std::size_t row_;
  std::size_t col_;
};

}  // namespace depcoef
