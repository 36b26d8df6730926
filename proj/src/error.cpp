#include "garside/error.hpp"

namespace garside {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NonSpherical: return "NonSpherical";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::ReducibleSubset: return "ReducibleSubset";
    case ErrorCode::ImproperSubset: return "ImproperSubset";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotFoundWithinRadius: return "NotFoundWithinRadius";
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::NotAnAbsorptionPair: return "NotAnAbsorptionPair";
    case ErrorCode::ZeroLength: return "ZeroLength";
    case ErrorCode::UniverseTooSmall: return "UniverseTooSmall";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::RepresentativeMissing: return "RepresentativeMissing";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotPureAtStrandOne: return "NotPureAtStrandOne";
    case ErrorCode::NotFoundWithinSearch: return "NotFoundWithinSearch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace garside
