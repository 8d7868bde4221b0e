#include "permtop/residue_perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

std::int64_t mod_pos(std::int64_t x, std::int64_t m)
{
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t least_period(const std::vector<std::int64_t> &v)
{
  auto n = static_cast<std::int64_t>(v.size());
  for (std::int64_t p = 1; p < n; ++p) {
    if (n % p != 0)
      continue;
    bool ok = true;
    for (std::int64_t i = p; i < n && ok; ++i)
      ok = v[i] == v[i - p];
    if (ok)
      return p;
  }
  return n;
}

} // namespace

ResiduePerm::ResiduePerm() = default;

ResiduePerm ResiduePerm::from_rule(std::int64_t modulus, std::vector<std::int64_t> shifts,
                                   Point bound, const std::function<Point(Point)> &images)
{
  if (modulus <= 0 || static_cast<std::int64_t>(shifts.size()) != modulus)
    throw Error(Errc::BadModulus, "shift vector size must equal a positive modulus");

  std::int64_t p = least_period(shifts);
  std::int64_t m = p % 2 == 0 ? p : 2 * p;
  std::vector<std::int64_t> canon(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r)
    canon[r] = shifts[r % p];

  ResiduePerm f;
  f.modulus_ = m;
  f.shifts_ = std::move(canon);

  std::vector<Point> head(static_cast<std::size_t>(std::max<Point>(bound, 0)));
  Point last_off = -1;
  for (Point x = 0; x < bound; ++x) {
    head[x] = images(x);
    if (head[x] != x + f.shifts_[x % m])
      last_off = x;
  }
  head.resize(static_cast<std::size_t>(last_off + 1));
  f.head_ = std::move(head);
  return f;
}

ResiduePerm ResiduePerm::validate(std::int64_t modulus, const std::vector<std::int64_t> &shifts,
                                  const std::vector<std::pair<Point, Point>> &patch)
{
  if (modulus <= 0 || static_cast<std::int64_t>(shifts.size()) != modulus)
    throw Error(Errc::BadModulus, "need a positive modulus and exactly one shift per residue");

  std::vector<bool> hit(static_cast<std::size_t>(modulus), false);
  for (std::int64_t r = 0; r < modulus; ++r) {
    auto c = mod_pos(r + shifts[r], modulus);
    if (hit[c])
      throw Error(Errc::BadResidueShift,
                  "residue " + std::to_string(c) + " is hit twice by r -> r + shift(r)",
                  c);
    hit[c] = true;
  }

  std::map<Point, Point> table;
  Point max_pt = -1;
  for (auto [a, b] : patch) {
    if (a < 0 || b < 0)
      throw Error(Errc::NegativeImage, "negative point in patch");
    auto [it, inserted] = table.emplace(a, b);
    if (!inserted && it->second != b)
      throw Error(Errc::NotBijective, "patch assigns two images to " + std::to_string(a), a);
    max_pt = std::max({max_pt, a, b});
  }

  std::int64_t disp = 0;
  for (auto d : shifts)
    disp = std::max(disp, d < 0 ? -d : d);

  Point bound = max_pt + disp + 1;
  Point window = bound + disp;
  auto f = [&](Point x) -> Point {
    auto it = table.find(x);
    return it != table.end() ? it->second : x + shifts[x % modulus];
  };

  std::vector<int> preimages(static_cast<std::size_t>(bound), 0);
  for (Point x = 0; x < window; ++x) {
    Point y = f(x);
    if (y < 0)
      throw Error(Errc::NegativeImage, "point " + std::to_string(x) + " maps below 0", x);
    if (y < bound)
      ++preimages[y];
  }
  for (Point y = 0; y < bound; ++y) {
    if (preimages[y] != 1)
      throw Error(Errc::NotBijective,
                  "point " + std::to_string(y) + " has " + std::to_string(preimages[y]) +
                    " preimages",
                  y);
  }

  return from_rule(modulus, shifts, window, f);
}

ResiduePerm ResiduePerm::sigma()
{
  return from_rule(2, {1, -1}, 0, [](Point x) { return x; });
}

ResiduePerm ResiduePerm::transposition(Point x, Point y)
{
  if (x == y || x < 0 || y < 0)
    throw Error(Errc::SemanticError, "transposition needs two distinct points");
  return cycle({x, y});
}

ResiduePerm ResiduePerm::cycle(const std::vector<Point> &points)
{
  std::map<Point, Point> next;
  Point bound = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 0)
      throw Error(Errc::SemanticError, "negative point in cycle");
    if (!next.emplace(points[i], points[(i + 1) % points.size()]).second)
      throw Error(Errc::SemanticError, "repeated point " + std::to_string(points[i]) + " in cycle");
    bound = std::max(bound, points[i] + 1);
  }
  return from_rule(2, {0, 0}, bound, [&](Point x) {
    auto it = next.find(x);
    return it == next.end() ? x : it->second;
  });
}

ResiduePerm ResiduePerm::from_images(const std::vector<Point> &images)
{
  std::vector<bool> seen(images.size(), false);
  for (auto y : images) {
    if (y < 0 || y >= static_cast<Point>(images.size()) || seen[y])
      throw Error(Errc::NotBijective, "image list is not a permutation of 0..n-1");
    seen[y] = true;
  }
  return from_rule(2, {0, 0}, static_cast<Point>(images.size()),
                   [&](Point x) { return images[x]; });
}

Point ResiduePerm::apply(Point x) const
{
  if (x < threshold())
    return head_[x];
  return x + shifts_[x % modulus_];
}

std::int64_t ResiduePerm::shift(std::int64_t residue) const
{
  return shifts_[mod_pos(residue, modulus_)];
}

std::int64_t ResiduePerm::max_displacement() const noexcept
{
  std::int64_t d = 0;
  for (auto s : shifts_)
    d = std::max(d, s < 0 ? -s : s);
  return d;
}

std::vector<std::pair<Point, Point>> ResiduePerm::patch() const
{
  std::vector<std::pair<Point, Point>> out;
  for (Point x = 0; x < threshold(); ++x)
    if (head_[x] != x + shifts_[x % modulus_])
      out.emplace_back(x, head_[x]);
  return out;
}

bool ResiduePerm::is_identity() const noexcept
{
  return has_finite_support() && head_.empty();
}

bool ResiduePerm::has_finite_support() const noexcept
{
  return std::all_of(shifts_.begin(), shifts_.end(), [](auto d) { return d == 0; });
}

EPSet ResiduePerm::support() const
{
  std::vector<bool> pattern(static_cast<std::size_t>(modulus_));
  for (std::int64_t r = 0; r < modulus_; ++r)
    pattern[r] = shifts_[r] != 0;
  return EPSet::from_rule(modulus_, std::move(pattern), threshold(),
                          [this](Point x) { return head_[x] != x; });
}

std::optional<Point> ResiduePerm::least_moved_point() const
{
  for (Point x = 0; x < threshold(); ++x)
    if (head_[x] != x)
      return x;
  for (Point x = threshold(); x < threshold() + modulus_; ++x)
    if (shifts_[x % modulus_] != 0)
      return x;
  return std::nullopt;
}

std::vector<std::vector<Point>> ResiduePerm::cycles() const
{
  if (!has_finite_support())
    throw Error(Errc::NotFinite, "cycle form needs finite support");
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(head_.size(), false);
  for (Point x = 0; x < threshold(); ++x) {
    if (done[x] || head_[x] == x)
      continue;
    std::vector<Point> cyc;
    for (Point y = x; !done[y]; y = head_[y]) {
      done[y] = true;
      cyc.push_back(y);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t ResiduePerm::hash() const noexcept
{
  std::size_t h = std::hash<std::int64_t>{}(modulus_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto s : shifts_)
    mix(std::hash<std::int64_t>{}(s));
  for (auto y : head_)
    mix(std::hash<Point>{}(y));
  return h;
}

ResiduePerm compose(const ResiduePerm &f, const ResiduePerm &g)
{
  std::int64_t m = std::lcm(f.modulus(), g.modulus());
  std::vector<std::int64_t> shifts(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) {
    std::int64_t dg = g.shift(r);
    shifts[r] = dg + f.shift(r + dg);
  }
  Point bound = std::max(g.threshold(), f.threshold() + g.max_displacement());
  return ResiduePerm::from_rule(m, std::move(shifts), bound,
                                [&](Point x) { return f.apply(g.apply(x)); });
}

ResiduePerm inverse(const ResiduePerm &f)
{
  std::int64_t m = f.modulus();
  std::vector<std::int64_t> shifts(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r)
    shifts[mod_pos(r + f.shifts()[r], m)] = -f.shifts()[r];

  std::int64_t disp = f.max_displacement();
  Point bound = f.threshold() + disp;
  std::vector<Point> pre(static_cast<std::size_t>(bound), -1);
  for (Point x = 0; x < f.threshold() + 2 * disp + 1; ++x) {
    Point y = f.apply(x);
    if (y < bound)
      pre[y] = x;
  }
  return ResiduePerm::from_rule(m, std::move(shifts), bound, [&](Point y) { return pre[y]; });
}

ResiduePerm conjugate(const ResiduePerm &g, const ResiduePerm &f)
{
  return compose(compose(g, f), inverse(g));
}

bool commutes(const ResiduePerm &f, const ResiduePerm &g)
{
  return compose(f, g) == compose(g, f);
}

bool is_involution(const ResiduePerm &f)
{
  return compose(f, f).is_identity();
}

EPSet image(const ResiduePerm &f, const EPSet &s)
{
  ResiduePerm g = inverse(f);
  std::int64_t m = std::lcm(g.modulus(), s.modulus());
  std::vector<bool> pattern(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r)
    pattern[r] = s.pattern()[mod_pos(r + g.shift(r), s.modulus())];
  Point bound = std::max(g.threshold(), s.threshold() + g.max_displacement());
  return EPSet::from_rule(m, std::move(pattern), bound,
                          [&](Point y) { return s.contains(g.apply(y)); });
}

Transposition noncommuting_transposition(const ResiduePerm &f, std::optional<Point> x)
{
  if (f.is_identity())
    throw Error(Errc::IdentityInput, "the identity commutes with every transposition");
  Point base = x ? *x : *f.least_moved_point();
  Point fx = f.apply(base);
  if (fx == base)
    throw Error(Errc::FixedPointGiven, "f fixes " + std::to_string(base), base);
  Point y = 0;
  while (y == base || y == fx)
    ++y;
  return {base, y};
}

} // namespace permtop
