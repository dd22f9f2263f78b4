#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vinberg {

// Every failure the library can report.  Codes are part of the public
// contract: callers dispatch on them, the CLI maps them to exit codes.
enum class ErrorCode {
  // Coxeter matrices and diagram moves
  NonSymmetric,
  BadDiagonal,
  BadOffDiagonal,
  NotLarge,
  NotTree,
  NotRightAngled,
  RankTooSmall,
  DegreeTooSmall,
  NotAReflection,
  UnsupportedPairing,
  // Cartan matrices
  PositiveOffDiagonal,
  ZeroAsymmetry,
  UnsupportedLabel,
  RankMismatch,
  ZeroPatternMismatch,
  Decomposable,
  CycleBudgetExceeded,
  // representations
  Incompatible,
  NotLargeIrreducible,
  RelationViolation,
  PreconditionViolated,
  // integrality
  NoConvergence,
  NotIrreducible,
  CyclicProductObstruction,
  // constructors
  IsTree,
  RankGapTooSmall,
  NoInfinitePairInK,
  BadLabels,
  NoSuitableCycle,
  ComplementNotAdmissible,
  // anything malformed that has no better code
  InvalidArgument,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::BadOffDiagonal: return "BadOffDiagonal";
    case ErrorCode::NotLarge: return "NotLarge";
    case ErrorCode::NotTree: return "NotTree";
    case ErrorCode::NotRightAngled: return "NotRightAngled";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotAReflection: return "NotAReflection";
    case ErrorCode::UnsupportedPairing: return "UnsupportedPairing";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::ZeroAsymmetry: return "ZeroAsymmetry";
    case ErrorCode::UnsupportedLabel: return "UnsupportedLabel";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ZeroPatternMismatch: return "ZeroPatternMismatch";
    case ErrorCode::Decomposable: return "Decomposable";
    case ErrorCode::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::NotLargeIrreducible: return "NotLargeIrreducible";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::CyclicProductObstruction: return "CyclicProductObstruction";
    case ErrorCode::IsTree: return "IsTree";
    case ErrorCode::RankGapTooSmall: return "RankGapTooSmall";
    case ErrorCode::NoInfinitePairInK: return "NoInfinitePairInK";
    case ErrorCode::BadLabels: return "BadLabels";
    case ErrorCode::NoSuitableCycle: return "NoSuitableCycle";
    case ErrorCode::ComplementNotAdmissible: return "ComplementNotAdmissible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Internal consistency checks; a throw here is a library bug, not bad input.
inline void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("internal invariant failed: ") + what);
}

}  // namespace vinberg
