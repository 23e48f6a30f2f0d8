#include "atlas/error.hpp"

namespace atlas {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NearPole: return "NearPole";
    case Errc::PoleAtOrigin: return "PoleAtOrigin";
    case Errc::PoleInDisk: return "PoleInDisk";
    case Errc::BranchCut: return "BranchCut";
    case Errc::LogConstant: return "LogConstant";
    case Errc::OutsideDisk: return "OutsideDisk";
    case Errc::UnknownId: return "UnknownId";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::DilatationTooLarge: return "DilatationTooLarge";
    case Errc::SeriesMismatch: return "SeriesMismatch";
    case Errc::ZeroValue: return "ZeroValue";
    case Errc::Parse: return "ParseError";
    case Errc::Unsupported: return "Unsupported";
    case Errc::Config: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace atlas
