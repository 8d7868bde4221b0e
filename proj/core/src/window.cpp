#include "permtop/window.hpp"

#include "permtop/errors.hpp"

namespace permtop {

Window::Window(std::vector<Point> points)
: points_(std::move(points))
{
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (points_.size() > 255)
    throw Error(Errc::TooLarge, "window holds at most 255 points");
}

Window Window::range(Point begin, Point end)
{
  std::vector<Point> pts;
  for (Point x = begin; x < end; ++x)
    pts.push_back(x);
  return Window(std::move(pts));
}

bool Window::contains(Point x) const
{
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::optional<std::size_t> Window::index_of(Point x) const
{
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x)
    return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

bool Window::contains_all(const std::vector<Point> &xs) const
{
  return std::all_of(xs.begin(), xs.end(), [this](Point x) { return contains(x); });
}

ResiduePerm Window::to_perm(const LocalPerm &p) const
{
  Point bound = points_.empty() ? 0 : points_.back() + 1;
  return ResiduePerm::from_rule(2, {0, 0}, bound, [&](Point x) {
    auto i = index_of(x);
    return i ? points_[p[*i]] : x;
  });
}

std::optional<LocalPerm> Window::restrict(const ResiduePerm &f) const
{
  EPSet supp = f.support();
  if (!supp.is_finite())
    return std::nullopt;
  for (auto x : supp.elements())
    if (!contains(x))
      return std::nullopt;
  LocalPerm p(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i)
    p[i] = static_cast<std::uint8_t>(*index_of(f.apply(points_[i])));
  return p;
}

} // namespace permtop
