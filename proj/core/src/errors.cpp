#include "permtop/errors.hpp"

namespace permtop {

std::string_view errc_name(Errc code) noexcept
{
  switch (code) {
  case Errc::BadModulus: return "BadModulus";
  case Errc::NotBijective: return "NotBijective";
  case Errc::BadResidueShift: return "BadResidueShift";
  case Errc::NegativeImage: return "NegativeImage";
  case Errc::IdentityInput: return "IdentityInput";
  case Errc::FixedPointGiven: return "FixedPointGiven";
  case Errc::NotFinite: return "NotFinite";
  case Errc::NoSuchPoint: return "NoSuchPoint";
  case Errc::NotInvolution: return "NotInvolution";
  case Errc::NotMember: return "NotMember";
  case Errc::NotTpWitnessable: return "NotTpWitnessable";
  case Errc::EqualInputs: return "EqualInputs";
  case Errc::InputInGA: return "InputInGA";
  case Errc::BadCardinality: return "BadCardinality";
  case Errc::IdentityF: return "IdentityF";
  case Errc::SupportTooSmall: return "SupportTooSmall";
  case Errc::SupportTooLarge: return "SupportTooLarge";
  case Errc::InfiniteSupport: return "InfiniteSupport";
  case Errc::PointNotInSupport: return "PointNotInSupport";
  case Errc::WindowTooSmall: return "WindowTooSmall";
  case Errc::FiniteSupport: return "FiniteSupport";
  case Errc::ZeroExponent: return "ZeroExponent";
  case Errc::NotAGroup: return "NotAGroup";
  case Errc::TooLarge: return "TooLarge";
  case Errc::SpecMismatch: return "SpecMismatch";
  case Errc::CarrierMismatch: return "CarrierMismatch";
  case Errc::BadNeighborhoods: return "BadNeighborhoods";
  case Errc::Overlap: return "Overlap";
  case Errc::Gap: return "Gap";
  case Errc::OddModulus: return "OddModulus";
  case Errc::SyntaxError: return "SyntaxError";
  case Errc::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string &what,
             std::optional<std::int64_t> witness)
: std::runtime_error(std::string(errc_name(code)) + ": " + what),
  code_(code), witness_(witness)
{}

SyntaxError::SyntaxError(std::size_t line, std::size_t col,
                         const std::string &msg)
: Error(Errc::SyntaxError,
        std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
  line_(line), col_(col)
{}

} // namespace permtop
