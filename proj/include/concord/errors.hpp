#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace concord {

/// Failure categories raised by the library. Every domain error carries one.
enum class Errc {
  OddSize,
  NotSquare,
  NonUnimodularSkewPart,
  HeightTooLargeForBudget,
  ZeroPolynomial,
  ConstantPolynomial,
  NotCoprime,
  HypothesisViolated,
  SplitFailed,
  InvalidMetabolizer,
  AsymmetricJumps,
  InvalidJump,
  InvalidProfile,
  OutOfRange,
  RootIsolationFailure,
  InfiniteHomology,
  MNotInvertible,
  SNotCoprime,
  StepHitsZero,
  HypothesisFailed,
  NotPrimePower,
  NotNaikShape,
  MixedQ,
  BadPrime,
  NoWitness,
  DuplicateTwist,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace concord
