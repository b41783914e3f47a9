#pragma once

#include <stdexcept>
#include <string>

namespace tas {

enum class ErrorCode {
  DuplicateTileName,
  UnknownSeedTile,
  DisconnectedSeed,
  BadStrength,
  EmptySeed,
  ParseError,
  OccupiedPosition,
  ConflictingOverlap,
  DisjointUnbound,
  EmptyAssembly,
  SystemNotFinite,
  SystemNotDirected,
  RepeatedPosition,
  NonAdjacentStep,
  NonBindingStep,
  EmptyPath,
  NoBond,
  Intersection,
  BadPrefix,
  PreconditionViolated,
  EmptySet,
  MixedOrigins,
  TooShort,
  ColumnOutOfRange,
  BadIndex,
  NoGlueOnColumn,
  NoVisibleGlue,
  NotACut,
  CorkCrossed,
  NotClosed,
  BadIndices,
  SearchBudgetExceeded,
  NoExtremalPath,
  ColumnOutOfWindow,
  BadWindow,
  NotAShield,
  ConfigTooLarge,
  UnknownLemma,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  explicit Error(ErrorCode code) : Error(code, "") {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Bounds exhaustive searches; exceeding the budget is an error, never a silent pass.
struct Budget {
  long long limit = 1000000;
  long long used = 0;
  void tick() {
    if (++used > limit) throw Error(ErrorCode::SearchBudgetExceeded, std::to_string(limit) + " nodes");
  }
};

}  // namespace tas
