#pragma once

#include <stdexcept>
#include <string>

namespace torifan {

enum class Err {
  ZeroVector,
  DependentGenerators,
  SingularMatrix,
  DuplicateRay,
  DegenerateCone,
  OverlappingCones,
  NotPure,
  NotComplete,
  FlipNotDefined,
  OutsideSupport,
  NotPrimitive,
  BadParameters,
  BadWeights,
  NotNef,
  Unbounded,
  NotProjective,
  DimensionMismatch,
  NotExtremal,
  NotRankTwo,
  IterationCapExceeded,
  ParseError,
};

inline const char* err_name(Err e) noexcept {
  switch (e) {
    case Err::ZeroVector: return "ZeroVector";
    case Err::DependentGenerators: return "DependentGenerators";
    case Err::SingularMatrix: return "SingularMatrix";
    case Err::DuplicateRay: return "DuplicateRay";
    case Err::DegenerateCone: return "DegenerateCone";
    case Err::OverlappingCones: return "OverlappingCones";
    case Err::NotPure: return "NotPure";
    case Err::NotComplete: return "NotComplete";
    case Err::FlipNotDefined: return "FlipNotDefined";
    case Err::OutsideSupport: return "OutsideSupport";
    case Err::NotPrimitive: return "NotPrimitive";
    case Err::BadParameters: return "BadParameters";
    case Err::BadWeights: return "BadWeights";
    case Err::NotNef: return "NotNef";
    case Err::Unbounded: return "Unbounded";
    case Err::NotProjective: return "NotProjective";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotExtremal: return "NotExtremal";
    case Err::NotRankTwo: return "NotRankTwo";
    case Err::IterationCapExceeded: return "IterationCapExceeded";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const noexcept { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace torifan
