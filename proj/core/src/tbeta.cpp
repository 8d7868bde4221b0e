#include "permtop/tbeta.hpp"

#include <algorithm>
#include <numeric>

#include "permtop/errors.hpp"

namespace permtop {

Partition Partition::validate(std::int64_t modulus, std::vector<EPSet> pieces)
{
  if (modulus <= 0 || modulus % 2 != 0)
    throw Error(Errc::OddModulus, "partition modulus must be positive and even", modulus);
  for (const auto &u : pieces)
    if (modulus % u.modulus() != 0)
      throw Error(Errc::BadModulus, "piece period " + std::to_string(u.modulus()) +
                                        " does not divide " + std::to_string(modulus));

  std::optional<Point> overlap;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (auto x = (pieces[i] & pieces[j]).min_element(); x && (!overlap || *x < *overlap))
        overlap = x;
  if (overlap)
    throw Error(Errc::Overlap, "pieces overlap at " + std::to_string(*overlap), *overlap);

  EPSet covered;
  for (const auto &u : pieces)
    covered = covered | u;
  if (auto gap = covered.complement().min_element())
    throw Error(Errc::Gap, "no piece contains " + std::to_string(*gap), *gap);

  Partition p;
  p.modulus_ = modulus;
  p.pieces_ = std::move(pieces);
  return p;
}

Partition Partition::validate(std::vector<EPSet> pieces)
{
  std::int64_t m = 1;
  for (const auto &u : pieces)
    m = std::lcm(m, u.modulus());
  if (m % 2 != 0)
    m *= 2;
  return validate(m, std::move(pieces));
}

bool stabilizes(const ResiduePerm &f, const Partition &p)
{
  return std::all_of(p.pieces().begin(), p.pieces().end(),
                     [&](const EPSet &u) { return image(f, u) == u; });
}

bool nbhd_member(const ResiduePerm &g, const ResiduePerm &f, const Partition &p)
{
  return std::all_of(p.pieces().begin(), p.pieces().end(),
                     [&](const EPSet &u) { return image(g, u) == image(f, u); });
}

EPSet disjoint_mover_set(const ResiduePerm &f)
{
  if (f.has_finite_support())
    throw Error(Errc::FiniteSupport, "f must have infinite support");
  const std::int64_t m = f.modulus();
  std::int64_t r = 0;
  while (f.shift(r) == 0)
    ++r;
  const std::int64_t d = f.shift(r);
  // A shift that is a multiple of M keeps the class mod M, so split it
  // further by parity of (x - r) / |d|.
  const std::int64_t period = d % m != 0 ? m : 2 * (d < 0 ? -d : d);
  return EPSet::residue_class(period, r) & EPSet::at_least(f.threshold());
}

ResiduePerm infinite_support_stabilizer(const Partition &p)
{
  const std::int64_t m = p.modulus();
  for (std::int64_t r = 0; r < m; ++r) {
    for (const auto &u : p.pieces()) {
      if (!u.pattern()[static_cast<std::size_t>(r % u.modulus())])
        continue;
      Point t = u.threshold();
      t += ((r - t) % (2 * m) + 2 * m) % (2 * m);
      std::vector<std::int64_t> shifts(static_cast<std::size_t>(2 * m), 0);
      shifts[static_cast<std::size_t>(r)] = m;
      shifts[static_cast<std::size_t>(r + m)] = -m;
      return ResiduePerm::from_rule(2 * m, std::move(shifts), t + m,
                                    [t, m](Point x) { return x == t ? x + m : x; });
    }
  }
  // Unreachable for a validated partition: some residue is eventually covered.
  throw Error(Errc::Gap, "partition has no infinite piece");
}

Partition singleton_partition(const std::vector<Point> &F)
{
  std::vector<EPSet> pieces;
  std::vector<Point> pts(F.begin(), F.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (auto x : pts)
    pieces.push_back(EPSet::finite({x}));
  pieces.push_back(EPSet::finite(pts).complement());
  return Partition::validate(std::move(pieces));
}

bool alpha_basic_equivalence(const std::vector<Point> &F, const std::vector<ResiduePerm> &samples)
{
  Partition cover = singleton_partition(F);
  const ResiduePerm id;
  for (const auto &g : samples) {
    bool in_nbhd = nbhd_member(g, id, cover);
    bool fixes = std::all_of(F.begin(), F.end(), [&](Point x) { return g(x) == x; });
    if (in_nbhd != fixes)
      return false;
  }
  return true;
}

} // namespace permtop
