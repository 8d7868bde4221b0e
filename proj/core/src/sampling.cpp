#include "permtop/sampling.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace permtop {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi)
{
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

std::vector<Point> Sampler::subset(std::int64_t n, std::size_t size)
{
  std::vector<Point> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Point{0});
  std::shuffle(all.begin(), all.end(), rng_);
  all.resize(std::min(size, all.size()));
  std::sort(all.begin(), all.end());
  return all;
}

ResiduePerm Sampler::finite_perm(std::int64_t n, std::size_t max_support)
{
  auto k = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_support)));
  std::vector<Point> pts = subset(n, k);
  std::vector<Point> images = pts;
  std::shuffle(images.begin(), images.end(), rng_);
  std::vector<Point> full(static_cast<std::size_t>(n));
  std::iota(full.begin(), full.end(), Point{0});
  for (std::size_t i = 0; i < pts.size(); ++i)
    full[pts[i]] = images[i];
  return ResiduePerm::from_images(full);
}

ResiduePerm Sampler::finite_involution(std::int64_t n)
{
  std::int64_t pairs = uniform(1, n / 2);
  std::vector<Point> pts = subset(n, static_cast<std::size_t>(2 * pairs));
  std::shuffle(pts.begin(), pts.end(), rng_);
  std::vector<Point> full(static_cast<std::size_t>(n));
  std::iota(full.begin(), full.end(), Point{0});
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
    std::swap(full[pts[i]], full[pts[i + 1]]);
  return ResiduePerm::from_images(full);
}

ResiduePerm Sampler::infinite_involution(std::int64_t conj_window)
{
  std::int64_t m = 2 * uniform(1, 4);
  std::vector<std::int64_t> res(static_cast<std::size_t>(m));
  std::iota(res.begin(), res.end(), 0);
  std::shuffle(res.begin(), res.end(), rng_);
  std::int64_t pairs = uniform(1, m / 2);
  std::vector<std::int64_t> shifts(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 0; i < pairs; ++i) {
    std::int64_t r = res[2 * i], s = res[2 * i + 1];
    shifts[r] = s - r;
    shifts[s] = r - s;
  }
  ResiduePerm base = ResiduePerm::validate(m, shifts);
  ResiduePerm g = finite_perm(conj_window, static_cast<std::size_t>(conj_window));
  return conjugate(g, base);
}

ResiduePerm Sampler::residue_perm(std::int64_t max_modulus)
{
  while (true) {
    std::int64_t m = 2 * uniform(1, std::max<std::int64_t>(1, max_modulus / 2));
    std::vector<std::int64_t> pi(static_cast<std::size_t>(m));
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<std::int64_t> wraps(static_cast<std::size_t>(m), 0);
    if (uniform(0, 3) != 0) {
      std::shuffle(pi.begin(), pi.end(), rng_);
      std::int64_t total = 0;
      for (auto &k : wraps) {
        k = uniform(-1, 1);
        total += k;
      }
      wraps[0] -= total;
    }
    std::vector<std::int64_t> shifts(static_cast<std::size_t>(m));
    std::int64_t disp = 0;
    for (std::int64_t r = 0; r < m; ++r) {
      shifts[r] = pi[r] - r + m * wraps[r];
      disp = std::max(disp, std::abs(shifts[r]));
    }

    Point head = disp + uniform(0, 6);
    Point limit = head + disp + 1;
    std::vector<bool> hit(static_cast<std::size_t>(limit), false);
    for (Point x = head; x < limit + disp; ++x) {
      Point y = x + shifts[x % m];
      if (y < limit)
        hit[y] = true;
    }
    std::vector<Point> missing;
    for (Point y = 0; y < limit; ++y)
      if (!hit[y])
        missing.push_back(y);
    if (static_cast<Point>(missing.size()) != head)
      continue;
    std::shuffle(missing.begin(), missing.end(), rng_);
    std::vector<std::pair<Point, Point>> patch;
    for (Point x = 0; x < head; ++x)
      patch.emplace_back(x, missing[x]);
    return ResiduePerm::validate(m, shifts, patch);
  }
}

ResiduePerm Sampler::infinite_residue_perm(std::int64_t max_modulus)
{
  while (true) {
    ResiduePerm f = residue_perm(max_modulus);
    if (!f.has_finite_support())
      return f;
  }
}

EPSet Sampler::epset(std::int64_t max_modulus, std::int64_t exceptions_below)
{
  std::int64_t m = uniform(1, max_modulus);
  std::vector<std::int64_t> residues;
  for (std::int64_t r = 0; r < m; ++r)
    if (coin())
      residues.push_back(r);
  std::vector<Point> added, removed;
  for (Point x = 0; x < exceptions_below; ++x) {
    switch (uniform(0, 5)) {
    case 0: added.push_back(x); break;
    case 1: removed.push_back(x); break;
    default: break;
    }
  }
  return EPSet::make(m, residues, added, removed);
}

Partition Sampler::partition(std::size_t max_pieces, std::int64_t max_modulus)
{
  std::int64_t m = 2 * uniform(1, std::max<std::int64_t>(1, max_modulus / 2));
  auto k = uniform(1, static_cast<std::int64_t>(max_pieces));
  std::vector<std::int64_t> owner_of_residue(static_cast<std::size_t>(m));
  for (auto &o : owner_of_residue)
    o = uniform(0, k - 1);
  std::map<Point, std::int64_t> moved;
  for (std::int64_t c = uniform(0, 4); c > 0; --c)
    moved[uniform(0, 2 * m - 1)] = uniform(0, k - 1);
  auto owner = [&](Point x) {
    auto it = moved.find(x);
    return it != moved.end() ? it->second : owner_of_residue[x % m];
  };

  std::vector<EPSet> pieces;
  for (std::int64_t i = 0; i < k; ++i) {
    std::vector<bool> pattern(static_cast<std::size_t>(m));
    for (std::int64_t r = 0; r < m; ++r)
      pattern[r] = owner_of_residue[r] == i;
    EPSet piece = EPSet::from_rule(m, pattern, 2 * m, [&](Point x) { return owner(x) == i; });
    if (!piece.is_empty())
      pieces.push_back(std::move(piece));
  }
  return Partition::validate(m, std::move(pieces));
}

FreeWord Sampler::free_word(const std::vector<std::int64_t> &generators, std::size_t max_letters)
{
  std::vector<Syllable> raw;
  auto n = uniform(0, static_cast<std::int64_t>(max_letters));
  for (std::int64_t i = 0; i < n; ++i) {
    auto g = generators[static_cast<std::size_t>(
      uniform(0, static_cast<std::int64_t>(generators.size()) - 1))];
    raw.push_back({g, coin() ? 1 : -1});
  }
  return FreeWord::reduce(raw);
}

SDElement Sampler::sd_element(const std::vector<std::int64_t> &generators,
                              std::size_t max_letters, std::int64_t max_shift)
{
  FreeWord w = free_word(generators, max_letters);
  return {w, uniform(-max_shift, max_shift)};
}

} // namespace permtop
