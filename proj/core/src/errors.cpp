#include "slgap/errors.hpp"

namespace slgap {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotMonic: return "NotMonic";
    case Errc::Reducible: return "Reducible";
    case Errc::ZeroDiscriminant: return "ZeroDiscriminant";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::RamifiedPrime: return "RamifiedPrime";
    case Errc::CompositePrimeDetected: return "CompositePrimeDetected";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::FactorMismatch: return "FactorMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooLargeForDense: return "TooLargeForDense";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::EmptyResult: return "EmptyResult";
    case Errc::AtlasUnavailable: return "AtlasUnavailable";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NonProximalMember: return "NonProximalMember";
    case Errc::NoSuchM: return "NoSuchM";
    case Errc::FreenessUnverified: return "FreenessUnverified";
  }
  return "Unknown";
}

}  // namespace slgap
