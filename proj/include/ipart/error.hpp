/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipart {

enum class ErrorKind {
  NoRootInInterval,
  NotIsolating,
  DivisionByZero,
  NegativeEvenRoot,
  CoefficientFieldRestricted,
  ZeroDenominator,
  RankMismatch,
  TruncationNotSupported,
  NotPositive,
  ZeroPolynomial,
  NotInSpan,
  NotFinite,
  NotInIntegerPart,
  RamificationTooSmall,
  DegenerateAtRoot,
  NonIntegralExponent,
  InvalidDescriptor,
  UnknownPredicate,
  SyntaxError,
  UnsupportedExponent,
  UnknownVariable,
};

std::string_view to_string(ErrorKind kind);

/* Every failure raised by the library carries one of the kinds above. */
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ipart
