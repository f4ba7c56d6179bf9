#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlogic {

enum class Errc {
  SizeMismatch,
  NotALattice,
  InconsistentCharacterizations,
  NoSuchElement,
  NotOrthomodular,
  ConversionInconsistency,
  InternalInconsistency,
  InvalidStructure,
  KindMismatch,
  TooLarge,
  ParseError,
  UnknownElement,
  DuplicateElement,
  MissingSection,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotALattice: return "NotALattice";
    case Errc::InconsistentCharacterizations: return "InconsistentCharacterizations";
    case Errc::NoSuchElement: return "NoSuchElement";
    case Errc::NotOrthomodular: return "NotOrthomodular";
    case Errc::ConversionInconsistency: return "ConversionInconsistency";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::InvalidStructure: return "InvalidStructure";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::MissingSection: return "MissingSection";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qlogic
