#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ktypes {

enum class Errc {
  InvalidArgument,
  LimitExceeded,
  // theory-dsl
  SyntaxError,
  ArityError,
  UnknownRelation,
  UnknownElement,
  UnboundVariable,
  DuplicateName,
  NegationNotAllowed,
  // logic-core / finite-semantics
  UnknownAtom,
  SignatureMismatch,
  NotAModel,
  NotASubstructure,
  // type-engine / dimension
  InconsistentType,
  TrivialType,
  NotKrullMinimalHere,
  TrivialFormula,
  InconsistentFormula,
  BadIndexSet,
  // poly-domain
  BothZero,
  ZeroPolynomial,
  DegreeCapExceeded,
  InconsistentSystem,
  CapExceeded,
  ImproperIdeal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Parse failure with a source position; `expected` lists the token kinds
/// that would have been accepted at that point (may be empty).
class ParseError : public Error {
 public:
  ParseError(Errc code, SourcePos pos, const std::string& message,
             std::vector<std::string> expected = {});
  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

}  // namespace ktypes
