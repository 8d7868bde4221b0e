#ifndef PERMTOP_ERRORS_HPP
#define PERMTOP_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permtop {

enum class Errc {
  // perm_core
  BadModulus,
  NotBijective,
  BadResidueShift,
  NegativeImage,
  IdentityInput,
  FixedPointGiven,
  NotFinite,
  NoSuchPoint,
  // subbase
  NotInvolution,
  NotMember,
  NotTpWitnessable,
  // witness engine
  EqualInputs,
  InputInGA,
  BadCardinality,
  IdentityF,
  SupportTooSmall,
  SupportTooLarge,
  InfiniteSupport,
  PointNotInSupport,
  // centralizer
  WindowTooSmall,
  FiniteSupport,
  // selfnorm
  ZeroExponent,
  // finite oracle
  NotAGroup,
  TooLarge,
  SpecMismatch,
  CarrierMismatch,
  BadNeighborhoods,
  // tbeta
  Overlap,
  Gap,
  OddModulus,
  // literals
  SyntaxError,
  SemanticError,
};

std::string_view errc_name(Errc code) noexcept;

/// Library-wide exception. `witness()` carries the point or index named by
/// errors such as Overlap(x), Gap(x) or NotInvolution(i).
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what,
        std::optional<std::int64_t> witness = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::int64_t> witness() const noexcept { return witness_; }

private:
  Errc code_;
  std::optional<std::int64_t> witness_;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t col, const std::string &msg);

  std::size_t line() const noexcept { return line_; }
  std::size_t col() const noexcept { return col_; }

private:
  std::size_t line_;
  std::size_t col_;
};

} // namespace permtop

#endif // PERMTOP_ERRORS_HPP
