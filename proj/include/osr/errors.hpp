#pragma once

#include <stdexcept>
#include <string>

namespace osr {

enum class ErrorCode {
  // incidence
  DuplicateLine,
  ZeroLine,
  PairCollision,
  BadIndex,
  BadParam,
  // resonance
  NotSumZero,
  ZeroWeight,
  SearchBudgetExceeded,
  // vinberg
  NotSymmetric,
  BadOffDiagonal,
  InternalTrichotomyError,
  TrichotomyViolation,
  // labelings
  Disconnected,
  NotInN,
  NotAffine,
  // realizer
  BadMatrix,
  NotDisjoint,
  BadNormalization,
  // pencils
  FlatNotInArrangement,
  Inapplicable,
  // i/o
  ParseError,
};

const char* error_code_name(ErrorCode c);

// Single exception type for all domain errors; tests dispatch on code().
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::ZeroLine: return "ZeroLine";
    case ErrorCode::PairCollision: return "PairCollision";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::NotSumZero: return "NotSumZero";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BadOffDiagonal: return "BadOffDiagonal";
    case ErrorCode::InternalTrichotomyError: return "InternalTrichotomyError";
    case ErrorCode::TrichotomyViolation: return "TrichotomyViolation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotInN: return "NotInN";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::BadMatrix: return "BadMatrix";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::BadNormalization: return "BadNormalization";
    case ErrorCode::FlatNotInArrangement: return "FlatNotInArrangement";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace osr
