#include "lech/errors.hpp"

namespace lech {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::InfiniteColength: return "InfiniteColength";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::BadGeneratorChoice: return "BadGeneratorChoice";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace lech
