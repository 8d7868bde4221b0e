#ifndef PERMTOP_EPSET_HPP
#define PERMTOP_EPSET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace permtop {

/// A point of the carrier, always a natural number.
using Point = std::int64_t;

/// Eventually periodic subset of the naturals.
///
/// Membership of x is `residues[x mod modulus]`, flipped for the finitely
/// many points listed in `added` (members outside the residue pattern) or
/// `removed` (non-members inside it). Values are always canonical: the
/// modulus is the least period of the residue pattern and the exception
/// lists are exactly the points where the pattern is wrong, so structural
/// equality is set equality.
class EPSet {
public:
  /// The empty set.
  EPSet();

  /// Builds and canonicalizes; residues are reduced modulo `modulus`.
  static EPSet make(std::int64_t modulus, const std::vector<std::int64_t> &residues,
                    const std::vector<Point> &added = {},
                    const std::vector<Point> &removed = {});

  static EPSet empty() { return {}; }
  static EPSet all();
  static EPSet finite(std::vector<Point> points);
  static EPSet residue_class(std::int64_t modulus, std::int64_t residue);
  /// {x : x >= from}
  static EPSet at_least(Point from);

  /// General constructor: `pattern` (size `modulus`) decides every x >= bound,
  /// `below` decides every x < bound.
  static EPSet from_rule(std::int64_t modulus, std::vector<bool> pattern,
                         Point bound, const std::function<bool(Point)> &below);

  bool contains(Point x) const;

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<bool> &pattern() const noexcept { return pattern_; }
  std::vector<std::int64_t> residues() const;
  const std::vector<Point> &added() const noexcept { return added_; }
  const std::vector<Point> &removed() const noexcept { return removed_; }
  /// Every x >= threshold() follows the residue pattern.
  Point threshold() const noexcept;

  bool is_finite() const noexcept;
  bool is_infinite() const noexcept { return !is_finite(); }
  bool is_empty() const noexcept { return is_finite() && added_.empty(); }
  bool is_all() const noexcept;

  /// Number of elements; throws NotFinite for infinite sets.
  std::size_t size() const;
  /// All elements in increasing order; throws NotFinite for infinite sets.
  std::vector<Point> elements() const;
  std::vector<Point> list_below(Point bound) const;

  /// Least member >= from, if any.
  std::optional<Point> next_member(Point from) const;
  std::optional<Point> min_element() const { return next_member(0); }
  /// Least non-member >= from, if any.
  std::optional<Point> next_nonmember(Point from) const;
  /// Least point outside the set; throws NoSuchPoint when the set is everything.
  Point pick_outside() const;

  EPSet complement() const;
  bool subset_of(const EPSet &other) const;
  bool disjoint_from(const EPSet &other) const;

  friend EPSet operator&(const EPSet &a, const EPSet &b);
  friend EPSet operator|(const EPSet &a, const EPSet &b);
  friend EPSet operator-(const EPSet &a, const EPSet &b);
  friend bool operator==(const EPSet &a, const EPSet &b) = default;

  std::size_t hash() const noexcept;

private:
  std::int64_t modulus_ = 1;
  std::vector<bool> pattern_{false};
  std::vector<Point> added_;
  std::vector<Point> removed_;
};

EPSet intersect(const EPSet &a, const EPSet &b);
EPSet unite(const EPSet &a, const EPSet &b);

} // namespace permtop

template <>
struct std::hash<permtop::EPSet> {
  std::size_t operator()(const permtop::EPSet &s) const noexcept { return s.hash(); }
};

#endif // PERMTOP_EPSET_HPP
