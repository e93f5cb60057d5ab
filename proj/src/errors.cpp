#include "partmod/errors.hpp"

namespace partmod {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::IrregularInput: return "IrregularInput";
    case Errc::NotEnoughNormalNodes: return "NotEnoughNormalNodes";
    case Errc::NotEnoughConormalNodes: return "NotEnoughConormalNodes";
    case Errc::NotNormal: return "NotNormal";
    case Errc::IrregularResult: return "IrregularResult";
    case Errc::OutsideLemmaScope: return "OutsideLemmaScope";
    case Errc::EmptyPartition: return "EmptyPartition";
    case Errc::NoSuchPartition: return "NoSuchPartition";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::VariantInconsistent: return "VariantInconsistent";
    case Errc::TooLarge: return "TooLarge";
    case Errc::OddDimension: return "OddDimension";
    case Errc::InternalDefect: return "InternalDefect";
  }
  return "Error";
}

}  // namespace partmod
