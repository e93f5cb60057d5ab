#pragma once

#include <stdexcept>
#include <string>

namespace partmod {

enum class Errc {
  NotAPartition,
  SizeMismatch,
  IrregularInput,
  NotEnoughNormalNodes,
  NotEnoughConormalNodes,
  NotNormal,
  IrregularResult,
  OutsideLemmaScope,
  EmptyPartition,
  NoSuchPartition,
  PreconditionViolated,
  OutOfRange,
  UnsupportedCharacteristic,
  VariantInconsistent,
  TooLarge,
  OddDimension,
  InternalDefect,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace partmod
