#ifndef PERMTOP_SUBBASE_HPP
#define PERMTOP_SUBBASE_HPP

#include <utility>
#include <variant>
#include <vector>

#include "permtop/residue_perm.hpp"

namespace permtop {

/// One letter of a one-variable group word: the variable to the power
/// +-1, or a constant group element.
struct VarLetter {
  int exponent = 1;
  friend bool operator==(const VarLetter &, const VarLetter &) = default;
};

struct ConstLetter {
  ResiduePerm value;
  friend bool operator==(const ConstLetter &, const ConstLetter &) = default;
};

using Letter = std::variant<VarLetter, ConstLetter>;

/// Word x^e1 g1 x^e2 g2 ... in the variable x; must contain the variable.
class GroupWord {
public:
  explicit GroupWord(std::vector<Letter> letters);

  const std::vector<Letter> &letters() const noexcept { return letters_; }

  friend bool operator==(const GroupWord &, const GroupWord &) = default;

private:
  std::vector<Letter> letters_;
};

/// Product of the letters with x substituted, (l1 o l2 o ... o ln).
ResiduePerm eval_word(const GroupWord &w, const ResiduePerm &x);

class OpenSetExpr;

/// {x : w(x) != 1}
struct WordNeq {
  GroupWord word;
  friend bool operator==(const WordNeq &, const WordNeq &) = default;
};

/// {x : x b x^-1 != a b a^-1}, b an involution (or the identity)
struct ConjNeq {
  ResiduePerm a;
  ResiduePerm b;
  friend bool operator==(const ConjNeq &, const ConjNeq &) = default;
};

/// {x : (x c x^-1) b (x c x^-1)^-1 != b}, b and c involutions
struct DoubleConjNeq {
  ResiduePerm b;
  ResiduePerm c;
  friend bool operator==(const DoubleConjNeq &, const DoubleConjNeq &) = default;
};

/// {g : g(x) = y}
struct PointFiber {
  Point x;
  Point y;
  friend bool operator==(const PointFiber &, const PointFiber &) = default;
};

/// {x : x b x^-1 = a b a^-1}
struct ConjEq {
  ResiduePerm a;
  ResiduePerm b;
  friend bool operator==(const ConjEq &, const ConjEq &) = default;
};

/// {g : g fixes every point of A}
struct FixesAll {
  std::vector<Point> points;
  friend bool operator==(const FixesAll &, const FixesAll &) = default;
};

/// {g : supt(g) is contained in A}
struct SupportIn {
  std::vector<Point> points;
  friend bool operator==(const SupportIn &, const SupportIn &) = default;
};

struct Intersection {
  std::vector<OpenSetExpr> parts;
  friend bool operator==(const Intersection &, const Intersection &);
};

/// Symbolic sub-basic (or basic) subset of the permutation group, decided
/// by a membership oracle. Involution parameters are checked on
/// construction (NotInvolution); point sets are sorted and deduplicated.
class OpenSetExpr {
public:
  using Node = std::variant<WordNeq, ConjNeq, DoubleConjNeq, PointFiber, ConjEq,
                            FixesAll, SupportIn, Intersection>;

  OpenSetExpr(WordNeq e);
  OpenSetExpr(ConjNeq e);
  OpenSetExpr(DoubleConjNeq e);
  OpenSetExpr(PointFiber e);
  OpenSetExpr(ConjEq e);
  OpenSetExpr(FixesAll e);
  OpenSetExpr(SupportIn e);
  OpenSetExpr(Intersection e);

  const Node &node() const noexcept { return node_; }

  template <typename T>
  const T *as() const noexcept { return std::get_if<T>(&node_); }

  friend bool operator==(const OpenSetExpr &, const OpenSetExpr &) = default;

private:
  Node node_;
};

bool member(const OpenSetExpr &e, const ResiduePerm &f);

/// The word x b x^-1 (a b a^-1)^-1 whose inequality defines ConjNeq(a, b).
GroupWord normalized_word(const ConjNeq &e);

/// Finite list of constraints (p, q), meaning g(p) = q, satisfied by f and
/// such that every g satisfying all of them is again a member of e. The
/// pairs are the points queried while evaluating the defining inequality at
/// the least witnessing point; inverse queries are stored as forward pairs.
///
/// Throws NotMember, or NotTpWitnessable for ConjEq and SupportIn.
std::vector<std::pair<Point, Point>> tp_open_witness(const OpenSetExpr &e,
                                                     const ResiduePerm &f);

/// True when g(p) = q for every constraint.
bool satisfies(const ResiduePerm &g, const std::vector<std::pair<Point, Point>> &constraints);

} // namespace permtop

#endif // PERMTOP_SUBBASE_HPP
