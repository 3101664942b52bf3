/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/error.hpp"

namespace ipart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoRootInInterval: return "NoRootInInterval";
    case ErrorKind::NotIsolating: return "NotIsolating";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeEvenRoot: return "NegativeEvenRoot";
    case ErrorKind::CoefficientFieldRestricted: return "CoefficientFieldRestricted";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::TruncationNotSupported: return "TruncationNotSupported";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NotInIntegerPart: return "NotInIntegerPart";
    case ErrorKind::RamificationTooSmall: return "RamificationTooSmall";
    case ErrorKind::DegenerateAtRoot: return "DegenerateAtRoot";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
  }
  return "UnknownError";
}

}  // namespace ipart
