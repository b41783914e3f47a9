#include "tas/error.hpp"

namespace tas {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateTileName: return "DuplicateTileName";
    case ErrorCode::UnknownSeedTile: return "UnknownSeedTile";
    case ErrorCode::DisconnectedSeed: return "DisconnectedSeed";
    case ErrorCode::BadStrength: return "BadStrength";
    case ErrorCode::EmptySeed: return "EmptySeed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OccupiedPosition: return "OccupiedPosition";
    case ErrorCode::ConflictingOverlap: return "ConflictingOverlap";
    case ErrorCode::DisjointUnbound: return "DisjointUnbound";
    case ErrorCode::EmptyAssembly: return "EmptyAssembly";
    case ErrorCode::SystemNotFinite: return "SystemNotFinite";
    case ErrorCode::SystemNotDirected: return "SystemNotDirected";
    case ErrorCode::RepeatedPosition: return "RepeatedPosition";
    case ErrorCode::NonAdjacentStep: return "NonAdjacentStep";
    case ErrorCode::NonBindingStep: return "NonBindingStep";
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::NoBond: return "NoBond";
    case ErrorCode::Intersection: return "Intersection";
    case ErrorCode::BadPrefix: return "BadPrefix";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::MixedOrigins: return "MixedOrigins";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::ColumnOutOfRange: return "ColumnOutOfRange";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NoGlueOnColumn: return "NoGlueOnColumn";
    case ErrorCode::NoVisibleGlue: return "NoVisibleGlue";
    case ErrorCode::NotACut: return "NotACut";
    case ErrorCode::CorkCrossed: return "CorkCrossed";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NoExtremalPath: return "NoExtremalPath";
    case ErrorCode::ColumnOutOfWindow: return "ColumnOutOfWindow";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::NotAShield: return "NotAShield";
    case ErrorCode::ConfigTooLarge: return "ConfigTooLarge";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
  }
  return "Unknown";
}

}  // namespace tas
