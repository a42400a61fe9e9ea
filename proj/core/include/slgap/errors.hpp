#pragma once

#include <stdexcept>
#include <string>

namespace slgap {

enum class Errc {
  NotMonic,
  Reducible,
  ZeroDiscriminant,
  NotSquareFree,
  RamifiedPrime,
  CompositePrimeDetected,
  NotAUnit,
  FactorMismatch,
  RingMismatch,
  TooLarge,
  TooLargeForDense,
  NotSymmetric,
  NoConvergence,
  BudgetExceeded,
  ModeMismatch,
  NotAPartition,
  HypothesisNotMet,
  EmptyResult,
  AtlasUnavailable,
  ZeroElement,
  NotGenerating,
  SearchExhausted,
  PrecisionLoss,
  IllConditioned,
  ZeroVector,
  NonProximalMember,
  NoSuchM,
  FreenessUnverified,
};

const char* errc_name(Errc c);

/// All library failures are reported as an Error carrying a stable code;
/// the what() string is "<code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace slgap
