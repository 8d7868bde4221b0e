#ifndef PERMTOP_RESIDUE_PERM_HPP
#define PERMTOP_RESIDUE_PERM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "permtop/epset.hpp"

namespace permtop {

/// A permutation of the naturals that, outside a finite head [0, threshold),
/// acts as the residue translation x -> x + shift(x mod modulus).
///
/// The set of all such permutations is a group containing every finitely
/// supported permutation and fixed-point-free involutions such as sigma
/// (2m <-> 2m+1). Values are canonical: least even modulus, shortest head.
/// Consequently operator== is pointwise equality on all of N.
class ResiduePerm {
public:
  /// The identity.
  ResiduePerm();

  /// Validates raw data. Points listed in `patch` map as given, all other
  /// points follow the residue rule.
  ///
  /// Throws BadModulus, BadResidueShift (r -> r + shift(r) is not a
  /// permutation mod M), NegativeImage or NotBijective.
  static ResiduePerm validate(std::int64_t modulus, const std::vector<std::int64_t> &shifts,
                              const std::vector<std::pair<Point, Point>> &patch = {});

  static ResiduePerm identity() { return {}; }
  /// The base involution 2m <-> 2m+1.
  static ResiduePerm sigma();
  static ResiduePerm transposition(Point x, Point y);
  /// Cycle x0 -> x1 -> ... -> x0. Points must be distinct.
  static ResiduePerm cycle(const std::vector<Point> &points);
  /// Finitely supported permutation given by images of 0..n-1.
  static ResiduePerm from_images(const std::vector<Point> &images);

  /// Trusted constructor: `images` gives f on [0, bound) and the rule
  /// determines f beyond. The caller guarantees bijectivity.
  static ResiduePerm from_rule(std::int64_t modulus, std::vector<std::int64_t> shifts,
                               Point bound, const std::function<Point(Point)> &images);

  Point apply(Point x) const;
  Point operator()(Point x) const { return apply(x); }

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::int64_t> &shifts() const noexcept { return shifts_; }
  std::int64_t shift(std::int64_t residue) const;
  /// Every x >= threshold() follows the residue rule.
  Point threshold() const noexcept { return static_cast<Point>(head_.size()); }
  /// Images of 0..threshold()-1.
  const std::vector<Point> &head() const noexcept { return head_; }
  /// Largest |shift|.
  std::int64_t max_displacement() const noexcept;

  /// Head entries that disagree with the residue rule.
  std::vector<std::pair<Point, Point>> patch() const;

  bool is_identity() const noexcept;
  bool has_finite_support() const noexcept;

  EPSet support() const;
  std::optional<Point> least_moved_point() const;

  /// Cycle decomposition, each cycle starting at its least point, cycles
  /// ordered by that point. Throws NotFinite for infinite support.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const ResiduePerm &a, const ResiduePerm &b) = default;
  std::size_t hash() const noexcept;

private:
  std::int64_t modulus_ = 2;
  std::vector<std::int64_t> shifts_{0, 0};
  std::vector<Point> head_;
};

/// (f o g)(x) = f(g(x)).
ResiduePerm compose(const ResiduePerm &f, const ResiduePerm &g);
ResiduePerm inverse(const ResiduePerm &f);
inline ResiduePerm operator*(const ResiduePerm &f, const ResiduePerm &g) { return compose(f, g); }

/// g f g^-1
ResiduePerm conjugate(const ResiduePerm &g, const ResiduePerm &f);

inline bool equals(const ResiduePerm &f, const ResiduePerm &g) { return f == g; }
bool commutes(const ResiduePerm &f, const ResiduePerm &g);
bool is_involution(const ResiduePerm &f);

/// Image f(S); again an EPSet since f translates residue classes eventually.
EPSet image(const ResiduePerm &f, const EPSet &s);

struct Transposition {
  Point x;
  Point y;

  ResiduePerm to_perm() const { return ResiduePerm::transposition(x, y); }
  friend bool operator==(const Transposition &, const Transposition &) = default;
};

/// Transposition t(x, y) that does not commute with f: x defaults to the
/// least moved point and y is the least point outside {x, f(x)}.
///
/// Throws IdentityInput, or FixedPointGiven when f(x) = x.
Transposition noncommuting_transposition(const ResiduePerm &f,
                                         std::optional<Point> x = std::nullopt);

} // namespace permtop

template <>
struct std::hash<permtop::ResiduePerm> {
  std::size_t operator()(const permtop::ResiduePerm &f) const noexcept { return f.hash(); }
};

#endif // PERMTOP_RESIDUE_PERM_HPP
