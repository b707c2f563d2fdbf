#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lech {

enum class ErrorKind {
  InvalidGenerator,
  InvalidPoint,
  InvalidRing,
  ZeroIdeal,
  UnitIdeal,
  RingMismatch,
  BaseMismatch,
  InfiniteColength,
  NotStabilized,
  NonIntegerResult,
  DimensionUnsupported,
  HypothesisNotMet,
  BadGeneratorChoice,
  InvalidChain,
  SyntaxError,
  UnknownVariable,
  ExponentOverflow,
  InvalidConfig,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Typed failure raised by every operation in the library. Input-side kinds
/// (syntax, config, ring spec) map to CLI exit code 2; hypothesis failures to 1.
class LechError : public std::runtime_error {
 public:
  LechError(ErrorKind kind, const std::string& message,
            std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw LechError(kind, message);
}

}  // namespace lech
