#include "permtop/subbase.hpp"

#include <algorithm>
#include <set>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Point> normalize_points(std::vector<Point> pts)
{
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void require_involution(const ResiduePerm &f, const char *what)
{
  if (!is_involution(f))
    throw Error(Errc::NotInvolution, std::string(what) + " must square to the identity");
}

PointFiber checked_fiber(PointFiber e)
{
  if (e.x < 0 || e.y < 0)
    throw Error(Errc::SemanticError, "fiber points must be natural numbers");
  return e;
}

bool support_disjoint(const ResiduePerm &f, const std::vector<Point> &pts)
{
  return std::all_of(pts.begin(), pts.end(), [&](Point a) { return f.apply(a) == a; });
}

// Defining inequality W(x) != target of the inequality-type sets.
struct Inequality {
  GroupWord word;
  ResiduePerm target;
};

Inequality inequality_of(const WordNeq &e) { return {e.word, ResiduePerm::identity()}; }

Inequality inequality_of(const ConjNeq &e)
{
  return {GroupWord({VarLetter{1}, ConstLetter{e.b}, VarLetter{-1}}), conjugate(e.a, e.b)};
}

Inequality inequality_of(const DoubleConjNeq &e)
{
  // (x c x^-1) b (x c x^-1)^-1 with c^-1 = c
  return {GroupWord({VarLetter{1}, ConstLetter{e.c}, VarLetter{-1}, ConstLetter{e.b},
                     VarLetter{1}, ConstLetter{e.c}, VarLetter{-1}}),
          e.b};
}

void trace_inequality(const Inequality &ineq, const ResiduePerm &f,
                      std::set<std::pair<Point, Point>> &out)
{
  ResiduePerm value = eval_word(ineq.word, f);
  auto p = compose(inverse(ineq.target), value).least_moved_point();
  if (!p)
    throw Error(Errc::NotMember, "the defining inequality fails");

  ResiduePerm finv = inverse(f);
  Point q = *p;
  const auto &letters = ineq.word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    std::visit(overloaded{
                 [&](const VarLetter &v) {
                   if (v.exponent > 0) {
                     Point next = f.apply(q);
                     out.emplace(q, next);
                     q = next;
                   } else {
                     Point prev = finv.apply(q);
                     out.emplace(prev, q);
                     q = prev;
                   }
                 },
                 [&](const ConstLetter &c) { q = c.value.apply(q); },
               },
               *it);
  }
}

void collect_constraints(const OpenSetExpr &e, const ResiduePerm &f,
                         std::set<std::pair<Point, Point>> &out)
{
  std::visit(overloaded{
               [&](const WordNeq &n) { trace_inequality(inequality_of(n), f, out); },
               [&](const ConjNeq &n) { trace_inequality(inequality_of(n), f, out); },
               [&](const DoubleConjNeq &n) { trace_inequality(inequality_of(n), f, out); },
               [&](const PointFiber &n) {
                 if (f.apply(n.x) != n.y)
                   throw Error(Errc::NotMember, "point fiber not satisfied");
                 out.emplace(n.x, n.y);
               },
               [&](const FixesAll &n) {
                 for (auto a : n.points) {
                   if (f.apply(a) != a)
                     throw Error(Errc::NotMember, "a point of A is moved");
                   out.emplace(a, a);
                 }
               },
               [&](const ConjEq &) {
                 throw Error(Errc::NotTpWitnessable,
                             "centralizer-type sets are not pointwise-open in general");
               },
               [&](const SupportIn &) {
                 throw Error(Errc::NotTpWitnessable, "G(A) is not pointwise-open");
               },
               [&](const Intersection &n) {
                 for (const auto &part : n.parts)
                   collect_constraints(part, f, out);
               },
             },
             e.node());
}

} // namespace

GroupWord::GroupWord(std::vector<Letter> letters)
: letters_(std::move(letters))
{
  bool has_var = false;
  for (const auto &l : letters_) {
    if (auto v = std::get_if<VarLetter>(&l)) {
      if (v->exponent != 1 && v->exponent != -1)
        throw Error(Errc::SemanticError, "variable exponent must be +1 or -1");
      has_var = true;
    }
  }
  if (!has_var)
    throw Error(Errc::SemanticError, "group word must contain the variable");
}

ResiduePerm eval_word(const GroupWord &w, const ResiduePerm &x)
{
  ResiduePerm xinv = inverse(x);
  ResiduePerm acc;
  for (const auto &l : w.letters()) {
    std::visit(overloaded{
                 [&](const VarLetter &v) { acc = compose(acc, v.exponent > 0 ? x : xinv); },
                 [&](const ConstLetter &c) { acc = compose(acc, c.value); },
               },
               l);
  }
  return acc;
}

bool operator==(const Intersection &a, const Intersection &b) { return a.parts == b.parts; }

OpenSetExpr::OpenSetExpr(WordNeq e) : node_(std::move(e)) {}

OpenSetExpr::OpenSetExpr(ConjNeq e)
  : node_((require_involution(e.b, "b"), std::move(e)))
{
}

OpenSetExpr::OpenSetExpr(DoubleConjNeq e)
  : node_((require_involution(e.b, "b"), require_involution(e.c, "c"), std::move(e)))
{
}

OpenSetExpr::OpenSetExpr(PointFiber e) : node_(checked_fiber(e)) {}

OpenSetExpr::OpenSetExpr(ConjEq e) : node_(std::move(e)) {}

OpenSetExpr::OpenSetExpr(FixesAll e) : node_(FixesAll{normalize_points(std::move(e.points))}) {}

OpenSetExpr::OpenSetExpr(SupportIn e) : node_(SupportIn{normalize_points(std::move(e.points))}) {}

OpenSetExpr::OpenSetExpr(Intersection e) : node_(std::move(e)) {}

bool member(const OpenSetExpr &e, const ResiduePerm &f)
{
  return std::visit(
    overloaded{
      [&](const WordNeq &n) { return !eval_word(n.word, f).is_identity(); },
      [&](const ConjNeq &n) { return conjugate(f, n.b) != conjugate(n.a, n.b); },
      [&](const DoubleConjNeq &n) {
        ResiduePerm y = conjugate(f, n.c);
        return conjugate(y, n.b) != n.b;
      },
      [&](const PointFiber &n) { return f.apply(n.x) == n.y; },
      [&](const ConjEq &n) { return conjugate(f, n.b) == conjugate(n.a, n.b); },
      [&](const FixesAll &n) { return support_disjoint(f, n.points); },
      [&](const SupportIn &n) {
        EPSet supp = f.support();
        return supp.subset_of(EPSet::finite(n.points));
      },
      [&](const Intersection &n) {
        return std::all_of(n.parts.begin(), n.parts.end(),
                           [&](const OpenSetExpr &p) { return member(p, f); });
      },
    },
    e.node());
}

GroupWord normalized_word(const ConjNeq &e)
{
  return GroupWord({VarLetter{1}, ConstLetter{e.b}, VarLetter{-1},
                    ConstLetter{inverse(conjugate(e.a, e.b))}});
}

std::vector<std::pair<Point, Point>> tp_open_witness(const OpenSetExpr &e, const ResiduePerm &f)
{
  std::set<std::pair<Point, Point>> out;
  collect_constraints(e, f, out);
  return {out.begin(), out.end()};
}

bool satisfies(const ResiduePerm &g, const std::vector<std::pair<Point, Point>> &constraints)
{
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const auto &c) { return g.apply(c.first) == c.second; });
}

} // namespace permtop
