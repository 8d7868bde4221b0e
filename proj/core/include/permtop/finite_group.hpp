#ifndef PERMTOP_FINITE_GROUP_HPP
#define PERMTOP_FINITE_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace permtop {

using Elem = std::uint32_t;

/// A finite group given by its multiplication. Index 0 is the identity.
///
/// Groups of order at most kTableLimit keep a full Cayley table; larger
/// symmetric groups multiply their one-line realizations on demand.
class FiniteGroup {
public:
  static constexpr std::size_t kTableLimit = 1000;
  static constexpr std::size_t kMaxDegree = 8;
  /// Largest order accepted by from_table (associativity check is cubic).
  static constexpr std::size_t kCheckedTableLimit = 256;

  /// S_n with elements in lexicographic one-line order. Throws TooLarge for
  /// n > 8 and BadCardinality for n = 0.
  static FiniteGroup symmetric(std::size_t n);

  /// Validates the table (identity at 0, Latin square, associativity).
  /// Throws NotAGroup or TooLarge.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table,
                                std::vector<std::string> names = {});

  /// Reads the text format: the order, an optional line of element names,
  /// then order*order row-major indices. Throws SyntaxError or NotAGroup.
  static FiniteGroup parse_table(std::istream &in);
  static FiniteGroup load_table(const std::string &path);

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }

  /// Degree of the permutation realization, if any.
  std::optional<std::size_t> degree() const noexcept { return degree_; }
  /// One-line images of element a (permutation groups only).
  const std::vector<std::uint8_t> &perm(Elem a) const { return perms_.at(a); }
  /// Index of a one-line permutation of the realization.
  Elem index_of(const std::vector<std::uint8_t> &p) const;

  std::string name(Elem a) const;
  std::vector<Elem> involutions(bool include_identity) const;

private:
  std::size_t order_ = 1;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> names_;
  std::optional<std::size_t> degree_;
  std::vector<std::vector<std::uint8_t>> perms_;
};

/// Lexicographic rank of a permutation of 0..n-1.
Elem perm_rank(const std::vector<std::uint8_t> &p);

} // namespace permtop

#endif // PERMTOP_FINITE_GROUP_HPP
