#include "ktypes/error.hpp"

namespace ktypes {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ArityError: return "ArityError";
    case Errc::UnknownRelation: return "UnknownRelation";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::NegationNotAllowed: return "NegationNotAllowed";
    case Errc::UnknownAtom: return "UnknownAtom";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::NotAModel: return "NotAModel";
    case Errc::NotASubstructure: return "NotASubstructure";
    case Errc::InconsistentType: return "InconsistentType";
    case Errc::TrivialType: return "TrivialType";
    case Errc::NotKrullMinimalHere: return "NotKrullMinimalHere";
    case Errc::TrivialFormula: return "TrivialFormula";
    case Errc::InconsistentFormula: return "InconsistentFormula";
    case Errc::BadIndexSet: return "BadIndexSet";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::InconsistentSystem: return "InconsistentSystem";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ImproperIdeal: return "ImproperIdeal";
  }
  return "Unknown";
}

namespace {

std::string positioned(SourcePos pos, const std::string& message,
                       const std::vector<std::string>& expected) {
  std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                    ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(Errc code, SourcePos pos, const std::string& message,
                       std::vector<std::string> expected)
    : Error(code, positioned(pos, message, expected)),
      pos_(pos),
      expected_(std::move(expected)) {}

}  // namespace ktypes
