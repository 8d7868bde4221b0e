#include "permtop/epset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

std::int64_t mod_pos(std::int64_t x, std::int64_t m)
{
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Least period of a cyclic pattern; it always divides the pattern length.
std::int64_t least_period(const std::vector<bool> &pattern)
{
  auto n = static_cast<std::int64_t>(pattern.size());
  for (std::int64_t p = 1; p < n; ++p) {
    if (n % p != 0)
      continue;
    bool ok = true;
    for (std::int64_t i = p; i < n && ok; ++i)
      ok = pattern[i] == pattern[i - p];
    if (ok)
      return p;
  }
  return n;
}

template <typename Op>
EPSet combine(const EPSet &a, const EPSet &b, Op op)
{
  std::int64_t m = std::lcm(a.modulus(), b.modulus());
  std::vector<bool> pattern(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r)
    pattern[r] = op(a.pattern()[r % a.modulus()], b.pattern()[r % b.modulus()]);
  Point bound = std::max(a.threshold(), b.threshold());
  return EPSet::from_rule(m, std::move(pattern), bound, [&](Point x) {
    return op(a.contains(x), b.contains(x));
  });
}

} // namespace

EPSet::EPSet() = default;

EPSet EPSet::from_rule(std::int64_t modulus, std::vector<bool> pattern,
                       Point bound, const std::function<bool(Point)> &below)
{
  if (modulus <= 0 || static_cast<std::int64_t>(pattern.size()) != modulus)
    throw Error(Errc::BadModulus, "pattern size must equal a positive modulus");

  EPSet s;
  std::int64_t p = least_period(pattern);
  pattern.resize(static_cast<std::size_t>(p));
  s.modulus_ = p;
  s.pattern_ = std::move(pattern);
  for (Point x = 0; x < bound; ++x) {
    bool in = below(x);
    bool rule = s.pattern_[x % p];
    if (in && !rule)
      s.added_.push_back(x);
    else if (!in && rule)
      s.removed_.push_back(x);
  }
  return s;
}

EPSet EPSet::make(std::int64_t modulus, const std::vector<std::int64_t> &residues,
                  const std::vector<Point> &added, const std::vector<Point> &removed)
{
  if (modulus <= 0)
    throw Error(Errc::BadModulus, "modulus must be positive");

  std::vector<bool> pattern(static_cast<std::size_t>(modulus), false);
  for (auto r : residues)
    pattern[mod_pos(r, modulus)] = true;

  std::set<Point> add(added.begin(), added.end());
  std::set<Point> rem(removed.begin(), removed.end());
  Point bound = 0;
  for (auto x : add) {
    if (x < 0)
      throw Error(Errc::SemanticError, "negative point in set literal");
    if (rem.count(x))
      throw Error(Errc::SemanticError,
                  "point " + std::to_string(x) + " is both added and removed");
    bound = std::max(bound, x + 1);
  }
  for (auto x : rem) {
    if (x < 0)
      throw Error(Errc::SemanticError, "negative point in set literal");
    bound = std::max(bound, x + 1);
  }

  return from_rule(modulus, pattern, bound, [&](Point x) {
    if (add.count(x))
      return true;
    if (rem.count(x))
      return false;
    return static_cast<bool>(pattern[x % modulus]);
  });
}

EPSet EPSet::all() { return make(1, {0}); }

EPSet EPSet::finite(std::vector<Point> points) { return make(1, {}, points, {}); }

EPSet EPSet::residue_class(std::int64_t modulus, std::int64_t residue)
{
  return make(modulus, {residue});
}

EPSet EPSet::at_least(Point from)
{
  return from_rule(1, {true}, from, [](Point) { return false; });
}

bool EPSet::contains(Point x) const
{
  if (x < 0)
    return false;
  if (std::binary_search(added_.begin(), added_.end(), x))
    return true;
  if (std::binary_search(removed_.begin(), removed_.end(), x))
    return false;
  return pattern_[x % modulus_];
}

std::vector<std::int64_t> EPSet::residues() const
{
  std::vector<std::int64_t> res;
  for (std::int64_t r = 0; r < modulus_; ++r)
    if (pattern_[r])
      res.push_back(r);
  return res;
}

Point EPSet::threshold() const noexcept
{
  Point t = 0;
  if (!added_.empty())
    t = std::max(t, added_.back() + 1);
  if (!removed_.empty())
    t = std::max(t, removed_.back() + 1);
  return t;
}

bool EPSet::is_finite() const noexcept
{
  return std::none_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; });
}

bool EPSet::is_all() const noexcept
{
  return modulus_ == 1 && pattern_[0] && removed_.empty();
}

std::size_t EPSet::size() const
{
  if (!is_finite())
    throw Error(Errc::NotFinite, "size of an infinite set");
  return added_.size();
}

std::vector<Point> EPSet::elements() const
{
  if (!is_finite())
    throw Error(Errc::NotFinite, "elements of an infinite set");
  return added_;
}

std::vector<Point> EPSet::list_below(Point bound) const
{
  std::vector<Point> out;
  for (Point x = 0; x < bound; ++x)
    if (contains(x))
      out.push_back(x);
  return out;
}

std::optional<Point> EPSet::next_member(Point from) const
{
  from = std::max<Point>(from, 0);
  Point t = threshold();
  for (Point x = from; x < t; ++x)
    if (contains(x))
      return x;
  Point start = std::max(from, t);
  for (Point x = start; x < start + modulus_; ++x)
    if (pattern_[x % modulus_])
      return x;
  return std::nullopt;
}

std::optional<Point> EPSet::next_nonmember(Point from) const
{
  from = std::max<Point>(from, 0);
  Point t = threshold();
  for (Point x = from; x < t; ++x)
    if (!contains(x))
      return x;
  Point start = std::max(from, t);
  for (Point x = start; x < start + modulus_; ++x)
    if (!pattern_[x % modulus_])
      return x;
  return std::nullopt;
}

Point EPSet::pick_outside() const
{
  auto x = next_nonmember(0);
  if (!x)
    throw Error(Errc::NoSuchPoint, "set contains every point");
  return *x;
}

EPSet EPSet::complement() const
{
  std::vector<bool> pattern(pattern_.size());
  for (std::size_t i = 0; i < pattern_.size(); ++i)
    pattern[i] = !pattern_[i];
  return from_rule(modulus_, std::move(pattern), threshold(),
                   [this](Point x) { return !contains(x); });
}

bool EPSet::subset_of(const EPSet &other) const { return (*this - other).is_empty(); }

bool EPSet::disjoint_from(const EPSet &other) const { return (*this & other).is_empty(); }

EPSet operator&(const EPSet &a, const EPSet &b)
{
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EPSet operator|(const EPSet &a, const EPSet &b)
{
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EPSet operator-(const EPSet &a, const EPSet &b)
{
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

EPSet intersect(const EPSet &a, const EPSet &b) { return a & b; }
EPSet unite(const EPSet &a, const EPSet &b) { return a | b; }

std::size_t EPSet::hash() const noexcept
{
  std::size_t h = std::hash<std::int64_t>{}(modulus_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (bool b : pattern_)
    mix(b);
  for (auto x : added_)
    mix(std::hash<Point>{}(x));
  mix(0xabcdef);
  for (auto x : removed_)
    mix(std::hash<Point>{}(x));
  return h;
}

} // namespace permtop
