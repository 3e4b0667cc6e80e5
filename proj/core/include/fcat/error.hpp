#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcat {

enum class ErrorCode {
  // category / functor construction
  DanglingDomain,
  MissingIdentity,
  PartialCompositionTable,
  NonAssociative,
  InvalidArgument,
  // set-valued functors
  NotFunction,
  IdentityViolated,
  CompositionViolated,
  ShapeMismatch,
  NaturalityViolated,
  SquareNotCommutative,
  // limits
  NotPseudoFiltered,
  NotACone,
  // reflections
  VerificationFailed,
  FNotInEI,
  CoverNotEpi,
  CoverDomainNotInSubcategory,
  // sketches
  NotAModel,
  MidNotModel,
  PipelineOracleMismatch,
  // invariants the library relies on (a failure is a bug, not bad input)
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` says which law or
/// precondition broke; `what()` names the witnessing data.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for codes that signal a broken internal guarantee rather than
  /// malformed input.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::InternalInvariant ||
           code_ == ErrorCode::MidNotModel ||
           code_ == ErrorCode::PipelineOracleMismatch;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void ensure(bool condition, const std::string& detail) {
  if (!condition) fail(ErrorCode::InternalInvariant, detail);
}

}  // namespace fcat
