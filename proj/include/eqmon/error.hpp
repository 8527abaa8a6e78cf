#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqmon {

/// Failure categories raised by the library. The CLI maps them onto exit codes.
enum class ErrorCode {
  // group construction
  NotSquare,
  DuplicateName,
  NotClosed,
  NoIdentity,
  NoInverse,
  NotAssociative,
  TooLarge,
  NotASubgroup,
  // G-set construction
  EmptyPointSet,
  BadDimensions,
  IdentityAxiomViolated,
  CompatibilityViolated,
  // maps
  InvalidWord,
  NotEquivariant,
  StabilizerNotContained,
  StabilizersNotEqual,
  SameOrbit,
  MissingOrbit,
  TooMany,
  DomainNotInvariant,
  NotInjective,
  NotEquivariantOnDomain,
  NotACollapsing,
  // reporting and I/O
  UnsupportedFormat,
  ParseError,
  UnknownCheck,
  MonoidTooLarge,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqmon
