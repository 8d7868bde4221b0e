#include "permtop/centralizer.hpp"

#include <algorithm>
#include <set>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

LocalPerm local_transposition(std::size_t n, std::size_t i, std::size_t j)
{
  LocalPerm t = local_identity(n);
  std::swap(t[i], t[j]);
  return t;
}

// Greedy generating subset of a subgroup listed in `elements`.
std::vector<LocalPerm> generating_subset(const std::vector<LocalPerm> &elements, std::size_t n)
{
  std::vector<LocalPerm> gens;
  std::set<LocalPerm> closure{local_identity(n)};
  for (const auto &c : elements) {
    if (closure.count(c))
      continue;
    gens.push_back(c);
    std::vector<LocalPerm> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<LocalPerm> next;
      for (const auto &x : frontier) {
        for (const auto &g : gens) {
          LocalPerm y = local_compose(x, g);
          if (closure.insert(y).second)
            next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

} // namespace

bool in_centralizer(const ResiduePerm &f, const std::vector<ResiduePerm> &F)
{
  return std::all_of(F.begin(), F.end(), [&](const ResiduePerm &h) { return commutes(f, h); });
}

bool in_subgroup_centralizer(const ResiduePerm &f, const std::vector<Point> &A)
{
  std::set<Point> pts(A.begin(), A.end());
  if (pts.size() < 2)
    throw Error(Errc::BadCardinality, "A needs at least two points");
  std::vector<Point> v(pts.begin(), pts.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!commutes(f, ResiduePerm::transposition(v[i], v[j])))
        return false;
  return true;
}

bool lemma33_check(const std::vector<Point> &A, const Window &W)
{
  std::set<std::size_t> local;
  for (auto a : A) {
    auto i = W.index_of(a);
    if (!i)
      throw Error(Errc::WindowTooSmall, "A must lie inside W");
    local.insert(*i);
  }
  std::vector<std::size_t> idx(local.begin(), local.end());
  std::vector<LocalPerm> gens;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      gens.push_back(local_transposition(W.size(), idx[i], idx[j]));

  bool holds = true;
  for_each_perm(W.size(), [&](const LocalPerm &f) {
    if (!holds)
      return;
    bool centralizes = std::all_of(gens.begin(), gens.end(),
                                   [&](const LocalPerm &t) { return local_commute(f, t); });
    bool fixes = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return f[i] == i; });
    holds = centralizes == fixes;
  });
  return holds;
}

std::vector<LocalPerm> window_centralizer(const std::vector<LocalPerm> &F, std::size_t n)
{
  std::vector<LocalPerm> out;
  for_each_perm(n, [&](const LocalPerm &f) {
    if (std::all_of(F.begin(), F.end(), [&](const LocalPerm &h) { return local_commute(f, h); }))
      out.push_back(f);
  });
  return out;
}

DoubleCentralizer double_centralizer_window(const std::vector<ResiduePerm> &F, const Window &W)
{
  std::set<Point> core;
  std::vector<LocalPerm> local;
  for (const auto &f : F) {
    auto lf = W.restrict(f);
    if (!lf)
      throw Error(Errc::WindowTooSmall, "a support is not inside W");
    local.push_back(*lf);
    for (auto x : f.support().elements())
      core.insert(x);
  }
  for (auto x : W.points()) {
    if (core.size() >= 3)
      break;
    core.insert(x);
  }
  if (core.size() < 3 || W.size() < core.size() + 3)
    throw Error(Errc::WindowTooSmall, "need |A| >= 3 and three points of W outside A");

  std::size_t n = W.size();
  auto first = window_centralizer(local, n);
  auto gens = generating_subset(first, n);
  auto second = window_centralizer(gens, n);

  DoubleCentralizer out;
  out.core.assign(core.begin(), core.end());
  for (const auto &p : second)
    out.elements.push_back(W.to_perm(p));
  return out;
}

Transposition cent_not_open_witness(const ResiduePerm &g, const std::vector<Point> &A)
{
  EPSet supp = g.support();
  if (supp.is_finite())
    throw Error(Errc::FiniteSupport, "g must have infinite support");
  std::set<Point> avoid(A.begin(), A.end());
  Point x = *(supp - EPSet::finite(A)).min_element();
  avoid.insert(x);
  avoid.insert(g.apply(x));
  Point y = 0;
  while (avoid.count(y))
    ++y;
  return {x, y};
}

} // namespace permtop
