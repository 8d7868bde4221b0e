#ifndef PERMTOP_WINDOW_HPP
#define PERMTOP_WINDOW_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "permtop/residue_perm.hpp"

namespace permtop {

/// One-line notation over the local indices 0..n-1 of a Window.
using LocalPerm = std::vector<std::uint8_t>;

/// A finite set of points W used to brute-force S(W).
class Window {
public:
  Window() = default;
  explicit Window(std::vector<Point> points);
  static Window range(Point begin, Point end);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point> &points() const noexcept { return points_; }
  Point point(std::size_t i) const { return points_[i]; }
  bool contains(Point x) const;
  std::optional<std::size_t> index_of(Point x) const;
  bool contains_all(const std::vector<Point> &xs) const;

  ResiduePerm to_perm(const LocalPerm &p) const;
  /// Local form of f, or nullopt when supt(f) is not inside the window.
  std::optional<LocalPerm> restrict(const ResiduePerm &f) const;

private:
  std::vector<Point> points_;
};

inline LocalPerm local_identity(std::size_t n)
{
  LocalPerm p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

/// (a o b)(i) = a[b[i]]
inline LocalPerm local_compose(const LocalPerm &a, const LocalPerm &b)
{
  LocalPerm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[b[i]];
  return c;
}

inline bool local_commute(const LocalPerm &a, const LocalPerm &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[b[i]] != b[a[i]])
      return false;
  return true;
}

inline std::size_t local_support_size(const LocalPerm &a)
{
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    n += a[i] != i;
  return n;
}

/// Calls fn on every permutation of 0..n-1 in lexicographic order.
template <typename Fn>
void for_each_perm(std::size_t n, Fn &&fn)
{
  LocalPerm p = local_identity(n);
  do {
    fn(static_cast<const LocalPerm &>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

/// Calls fn on every permutation of 0..n-1 moving at most `max_support`
/// points. Order: by support size, then support set, then lexicographic.
template <typename Fn>
void for_each_bounded_support(std::size_t n, std::size_t max_support, Fn &&fn)
{
  LocalPerm p = local_identity(n);
  fn(static_cast<const LocalPerm &>(p));
  for (std::size_t k = 2; k <= std::min(max_support, n); ++k) {
    std::vector<std::size_t> subset(k);
    std::iota(subset.begin(), subset.end(), std::size_t{0});
    for (;;) {
      std::vector<std::size_t> img = subset;
      do {
        bool derangement = true;
        for (std::size_t i = 0; i < k && derangement; ++i)
          derangement = img[i] != subset[i];
        if (derangement) {
          for (std::size_t i = 0; i < k; ++i)
            p[subset[i]] = static_cast<std::uint8_t>(img[i]);
          fn(static_cast<const LocalPerm &>(p));
          for (std::size_t i = 0; i < k; ++i)
            p[subset[i]] = static_cast<std::uint8_t>(subset[i]);
        }
      } while (std::next_permutation(img.begin(), img.end()));

      // next k-combination of 0..n-1
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j)
        subset[j] = subset[j - 1] + 1;
    }
  }
}

} // namespace permtop

#endif // PERMTOP_WINDOW_HPP
