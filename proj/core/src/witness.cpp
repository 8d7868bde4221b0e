#include "permtop/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "permtop/errors.hpp"
#include "permtop/window.hpp"

namespace permtop {

namespace {

// Least `count` points outside `avoid`, in increasing order.
std::vector<Point> least_outside(const std::set<Point> &avoid, std::size_t count)
{
  std::vector<Point> out;
  for (Point x = 0; out.size() < count; ++x)
    if (!avoid.count(x))
      out.push_back(x);
  return out;
}

OpenSetExpr conj_neq_transposition(Point p, Point q)
{
  return ConjNeq{ResiduePerm::identity(), ResiduePerm::transposition(p, q)};
}

// f lies in ConjNeq(1, t(p, q)) iff f does not preserve {p, q}.
bool moves_pair(const LocalPerm &f, std::size_t p, std::size_t q)
{
  return !((f[p] == p && f[q] == q) || (f[p] == q && f[q] == p));
}

struct LocalFactors {
  Window window;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

LocalFactors localize(const std::vector<std::pair<Point, Point>> &factors,
                      const std::vector<Point> &required, std::size_t extra)
{
  std::set<Point> pts(required.begin(), required.end());
  for (auto [p, q] : factors) {
    pts.insert(p);
    pts.insert(q);
  }
  for (auto x : least_outside(pts, extra))
    pts.insert(x);
  LocalFactors lf{Window({pts.begin(), pts.end()}), {}};
  for (auto [p, q] : factors)
    lf.pairs.emplace_back(*lf.window.index_of(p), *lf.window.index_of(q));
  return lf;
}

bool in_all_factors(const LocalPerm &f, const LocalFactors &lf)
{
  return std::all_of(lf.pairs.begin(), lf.pairs.end(),
                     [&](const auto &pq) { return moves_pair(f, pq.first, pq.second); });
}

std::vector<Point> finite_support(const ResiduePerm &g)
{
  EPSet s = g.support();
  if (!s.is_finite())
    throw Error(Errc::InfiniteSupport, "permutation has infinite support");
  return s.elements();
}

} // namespace

OpenSetExpr t1_separator(const ResiduePerm &f, const ResiduePerm &g)
{
  if (f == g)
    throw Error(Errc::EqualInputs, "cannot separate a point from itself");
  ResiduePerm h = compose(inverse(f), g);
  Transposition t = noncommuting_transposition(h);
  return ConjNeq{f, t.to_perm()};
}

OpenSetExpr stabilizer_closed_witness(const ResiduePerm &f, const std::vector<Point> &A)
{
  std::set<Point> pts(A.begin(), A.end());
  if (pts.size() != 3 || A.size() != 3)
    throw Error(Errc::BadCardinality, "A must have exactly three points");
  for (auto a : pts) {
    Point fa = f.apply(a);
    if (fa == a)
      continue;
    for (auto b : pts)
      if (b != a && b != fa)
        return conj_neq_transposition(a, b);
  }
  throw Error(Errc::InputInGA, "f fixes A pointwise");
}

ResiduePerm extend_partial_injection(const std::vector<std::pair<Point, Point>> &pairs)
{
  std::map<Point, Point> map;
  std::set<Point> range;
  for (auto [x, y] : pairs) {
    if (!map.emplace(x, y).second || !range.insert(y).second)
      throw Error(Errc::NotBijective, "partial map is not injective");
  }
  std::vector<Point> loose_range, loose_domain;
  for (auto y : range)
    if (!map.count(y))
      loose_range.push_back(y);
  for (auto &[x, y] : map)
    if (!range.count(x))
      loose_domain.push_back(x);
  for (std::size_t i = 0; i < loose_range.size(); ++i)
    map.emplace(loose_range[i], loose_domain[i]);

  Point bound = map.empty() ? 0 : map.rbegin()->first + 1;
  return ResiduePerm::from_rule(2, {0, 0}, bound, [&](Point x) {
    auto it = map.find(x);
    return it == map.end() ? x : it->second;
  });
}

ZneZWitness znez_witness(const ZneZInstance &inst)
{
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const auto &f = inst.pairs[i].f;
    if (f.is_identity())
      throw Error(Errc::IdentityF, "pair " + std::to_string(i + 1) + ": f is the identity",
                  static_cast<std::int64_t>(i + 1));
    if (!is_involution(f))
      throw Error(Errc::NotInvolution,
                  "pair " + std::to_string(i + 1) + ": f is not an involution",
                  static_cast<std::int64_t>(i + 1));
  }

  ZneZWitness w;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i)
    if (!inst.pairs[i].f.has_finite_support())
      w.order.push_back(i);
  w.infinite_count = w.order.size();
  for (std::size_t i = 0; i < inst.pairs.size(); ++i)
    if (inst.pairs[i].f.has_finite_support())
      w.order.push_back(i);

  std::set<Point> core{inst.anchor};
  for (std::size_t j = w.infinite_count; j < w.order.size(); ++j) {
    const auto &[f, g] = inst.pairs[w.order[j]];
    for (auto s : f.support().elements()) {
      core.insert(s);
      core.insert(g.apply(s));
    }
  }
  w.finite_core.assign(core.begin(), core.end());

  std::vector<Point> targets = least_outside(core, core.size());
  std::set<Point> core_image(targets.begin(), targets.end());
  for (std::size_t j = 0; j < w.finite_core.size(); ++j)
    w.initial_map.emplace_back(w.finite_core[j], targets[j]);

  std::set<Point> used_domain = core;     // F u X_{<i}
  std::set<Point> used_range = core_image; // u0(F) u Y_{<i}
  std::vector<std::pair<Point, Point>> assignment = w.initial_map;

  for (std::size_t j = 0; j < w.infinite_count; ++j) {
    const auto &[f, g] = inst.pairs[w.order[j]];
    ResiduePerm ginv = inverse(g);

    std::set<Point> forbidden = used_domain;
    for (auto p : used_domain)
      forbidden.insert(f.apply(p)); // f^-1 = f
    for (auto q : used_range)
      forbidden.insert(ginv.apply(q));

    EPSet supp = f.support();
    Point x = *supp.next_member(0);
    while (forbidden.count(x))
      x = *supp.next_member(x + 1);

    Point fx = f.apply(x);
    Point gx = g.apply(x);
    Point gfx = g.apply(fx);
    Point y = 0;
    while (y == gx || y == gfx || used_range.count(y))
      ++y;

    w.xs.push_back(x);
    w.ys.push_back(y);
    assignment.emplace_back(x, gx);
    assignment.emplace_back(fx, y);
    used_domain.insert(x);
    used_domain.insert(fx);
    used_range.insert(gx);
    used_range.insert(y);
  }

  w.u = extend_partial_injection(assignment);
  return w;
}

bool znez_holds(const ZneZInstance &inst, const ResiduePerm &u)
{
  if (!u.has_finite_support() || u.apply(inst.anchor) == inst.anchor)
    return false;
  return std::all_of(inst.pairs.begin(), inst.pairs.end(), [&](const ZneZPair &p) {
    return conjugate(u, p.f) != conjugate(p.g, p.f);
  });
}

InjectiveTable::InjectiveTable(std::vector<Point> domain, std::size_t levels,
                               std::vector<Point> values)
: domain_(std::move(domain)), levels_(levels), values_(std::move(values))
{
  std::set<Point> dom(domain_.begin(), domain_.end());
  std::set<Point> img;
  if (values_.size() != domain_.size() * (levels_ + 1))
    throw Error(Errc::SemanticError, "table size mismatch");
  for (auto v : values_)
    if (dom.count(v) || !img.insert(v).second)
      throw Error(Errc::SemanticError, "table must be injective with image outside A");
}

InjectiveTable InjectiveTable::least(std::vector<Point> domain, std::size_t levels)
{
  std::set<Point> dom(domain.begin(), domain.end());
  auto values = least_outside(dom, domain.size() * (levels + 1));
  return {std::move(domain), levels, std::move(values)};
}

Point InjectiveTable::at(std::size_t domain_index, std::size_t level) const
{
  return values_.at(domain_index * (levels_ + 1) + level);
}

ClosedBallWitness closed_ball_witness(const ResiduePerm &g, std::size_t n)
{
  std::vector<Point> A = finite_support(g);
  if (A.size() <= n)
    throw Error(Errc::SupportTooSmall,
                "|supt(g)| = " + std::to_string(A.size()) + " does not exceed n");
  InjectiveTable table = InjectiveTable::least(A, n);
  Intersection expr;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k <= n; ++k)
      expr.parts.push_back(conj_neq_transposition(A[i], table.at(i, k)));
  return {OpenSetExpr(std::move(expr)), std::move(table)};
}

OpenSetExpr point_support_witness(const ResiduePerm &g, Point x, std::size_t n)
{
  EPSet supp = g.support();
  if (!supp.is_finite() || supp.size() > n)
    throw Error(Errc::SupportTooLarge, "g moves more than n points");
  if (!supp.contains(x))
    throw Error(Errc::PointNotInSupport, "g fixes " + std::to_string(x), x);
  auto elems = supp.elements();
  auto A = least_outside({elems.begin(), elems.end()}, n + 1);
  Intersection expr;
  for (auto a : A)
    expr.parts.push_back(conj_neq_transposition(x, a));
  return expr;
}

IsolationWitness isolation_witness(const ResiduePerm &g)
{
  std::vector<Point> A = finite_support(g);
  std::size_t n = A.size();
  Intersection expr;
  for (auto x : A) {
    auto part = point_support_witness(g, x, n);
    for (const auto &factor : part.as<Intersection>()->parts)
      expr.parts.push_back(factor);
  }
  OpenSetExpr e(std::move(expr));

  std::vector<ResiduePerm> candidates;
  Window w(A);
  for_each_perm(w.size(), [&](const LocalPerm &p) {
    if (local_support_size(p) != n)
      return;
    ResiduePerm f = w.to_perm(p);
    if (member(e, f))
      candidates.push_back(std::move(f));
  });
  return {std::move(e), std::move(candidates)};
}

std::vector<std::pair<Point, Point>> transposition_factors(const OpenSetExpr &expr)
{
  std::vector<const OpenSetExpr *> leaves;
  if (auto in = expr.as<Intersection>()) {
    for (const auto &p : in->parts)
      leaves.push_back(&p);
  } else {
    leaves.push_back(&expr);
  }
  std::vector<std::pair<Point, Point>> out;
  for (const auto *leaf : leaves) {
    const auto *c = leaf->as<ConjNeq>();
    if (!c || !c->a.is_identity())
      throw Error(Errc::SpecMismatch, "expected ConjNeq(1, t) factors");
    auto cyc = c->b.cycles();
    if (cyc.size() != 1 || cyc[0].size() != 2)
      throw Error(Errc::SpecMismatch, "expected a transposition parameter");
    out.emplace_back(cyc[0][0], cyc[0][1]);
  }
  return out;
}

WindowCheck check_closed_ball(const ClosedBallWitness &w, std::size_t n, std::size_t extra)
{
  LocalFactors lf = localize(transposition_factors(w.expr), w.table.domain(), extra);
  WindowCheck check;
  for_each_bounded_support(lf.window.size(), n, [&](const LocalPerm &f) {
    ++check.enumerated;
    if (in_all_factors(f, lf))
      check.counterexamples.push_back(lf.window.to_perm(f));
  });
  return check;
}

WindowCheck check_isolation(const IsolationWitness &w, const ResiduePerm &g, std::size_t extra)
{
  std::vector<Point> A = finite_support(g);
  std::size_t n = A.size();
  std::vector<std::pair<Point, Point>> factors;
  if (!(w.expr.as<Intersection>() && w.expr.as<Intersection>()->parts.empty()))
    factors = transposition_factors(w.expr);
  LocalFactors lf = localize(factors, A, extra);

  std::set<LocalPerm> listed;
  for (const auto &c : w.candidates)
    if (auto local = lf.window.restrict(c))
      listed.insert(*local);

  WindowCheck check;
  for_each_bounded_support(lf.window.size(), n, [&](const LocalPerm &f) {
    if (local_support_size(f) != n)
      return;
    ++check.enumerated;
    if (in_all_factors(f, lf) && !listed.count(f))
      check.counterexamples.push_back(lf.window.to_perm(f));
  });
  return check;
}

} // namespace permtop
