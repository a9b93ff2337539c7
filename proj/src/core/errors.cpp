#include "lietrees/core/errors.hpp"

namespace lietrees {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateLeaf: return "DuplicateLeaf";
    case Errc::EmptyLabelSet: return "EmptyLabelSet";
    case Errc::LabelClash: return "LabelClash";
    case Errc::ModelMismatch: return "ModelMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGroupElement: return "UnknownGroupElement";
    case Errc::NotMultilinear: return "NotMultilinear";
    case Errc::LTooSmall: return "LTooSmall";
    case Errc::InfiniteEnumeration: return "InfiniteEnumeration";
    case Errc::NotResolvable: return "NotResolvable";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidGroupModel: return "InvalidGroupModel";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EntryBlowUp: return "EntryBlowUp";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(Errc::SyntaxError, message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace lietrees
