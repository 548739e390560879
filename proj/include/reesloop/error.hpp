#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reesloop {

enum class ErrorCode {
  NonAssociative,
  BadZero,
  BadIdentity,
  IndexOutOfRange,
  EmptySubset,
  NotAnIdeal,
  ZeroEntryWithoutZero,
  NoIdentity,
  NoZero,
  NotIdempotent,
  NotASubsemigroup,
  OrderTooLarge,
  NotGenerating,
  AlphabetMismatch,
  NotInvolutive,
  EmptyVertexSet,
  NotInLoopProblem,
  HasZero,
  ZeroEntry,
  HypothesisFailed,
  RestrictionNotOntoT,
  NoUnitInP,
  NotCompletelyZeroSimple,
  InternalError,
  Parse,
  Usage,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the first triple (a, b, c) in lexicographic order with (ab)c != a(bc).
class NonAssociativeError : public Error {
 public:
  NonAssociativeError(std::array<unsigned, 3> triple, const std::string& what)
      : Error(ErrorCode::NonAssociative, what), triple_(triple) {}

  std::array<unsigned, 3> triple() const noexcept { return triple_; }

 private:
  std::array<unsigned, 3> triple_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace reesloop
