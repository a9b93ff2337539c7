#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lietrees {

enum class Errc {
  DuplicateLeaf,
  EmptyLabelSet,
  LabelClash,
  ModelMismatch,
  SyntaxError,
  UnknownGroupElement,
  NotMultilinear,
  LTooSmall,
  InfiniteEnumeration,
  NotResolvable,
  DimensionMismatch,
  InvalidGroupModel,
  InvalidArgument,
  EntryBlowUp,
};

std::string_view errc_name(Errc code);

/// Domain error raised by every module. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lietrees
