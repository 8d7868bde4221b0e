#ifndef PERMTOP_WITNESS_HPP
#define PERMTOP_WITNESS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "permtop/residue_perm.hpp"
#include "permtop/subbase.hpp"

namespace permtop {

/// Restricted-Zariski neighborhood separating two distinct elements:
/// ConjNeq(f, t) with t = t(x, y) built from h = f^-1 g at its least moved
/// point x. Contains g, excludes f. Throws EqualInputs.
OpenSetExpr t1_separator(const ResiduePerm &f, const ResiduePerm &g);

/// For f moving some point of the 3-element set A: ConjNeq(1, t(a, b)) with
/// a the least moved point of A and b the least point of A \ {a, f(a)}.
/// The set contains f and misses every g fixing A pointwise.
/// Throws BadCardinality or InputInGA.
OpenSetExpr stabilizer_closed_witness(const ResiduePerm &f, const std::vector<Point> &A);

struct ZneZPair {
  ResiduePerm f; ///< involution, not the identity
  ResiduePerm g;
};

struct ZneZInstance {
  std::vector<ZneZPair> pairs;
  Point anchor = 0;
};

/// Output of the construction together with its intermediate choices.
struct ZneZWitness {
  ResiduePerm u;
  /// Original (0-based) index of each pair after moving infinite-support
  /// involutions to the front.
  std::vector<std::size_t> order;
  std::size_t infinite_count = 0;
  std::vector<Point> finite_core;                    ///< F
  std::vector<std::pair<Point, Point>> initial_map;  ///< u0 : F -> N \ F
  std::vector<Point> xs;
  std::vector<Point> ys;
};

/// Finitely supported u with u f_i u^-1 != g_i f_i g_i^-1 for every pair and
/// u(anchor) != anchor, so the identity's neighborhood cut out by these
/// inequalities is not inside the stabilizer of the anchor.
///
/// Throws NotInvolution(i) or IdentityF(i), i being the 1-based pair index.
ZneZWitness znez_witness(const ZneZInstance &inst);

/// Rechecks every postcondition of znez_witness for a candidate u.
bool znez_holds(const ZneZInstance &inst, const ResiduePerm &u);

/// Extends a partial injection to a finitely supported permutation: range
/// points outside the domain are sent, in increasing order, to domain
/// points outside the range; everything else is fixed.
ResiduePerm extend_partial_injection(const std::vector<std::pair<Point, Point>> &pairs);

/// Injective map alpha : A x {0..levels} -> N \ A.
class InjectiveTable {
public:
  InjectiveTable(std::vector<Point> domain, std::size_t levels, std::vector<Point> values);

  /// Least table: entries assigned in (a, k) order from the least free points.
  static InjectiveTable least(std::vector<Point> domain, std::size_t levels);

  const std::vector<Point> &domain() const noexcept { return domain_; }
  std::size_t levels() const noexcept { return levels_; }
  Point at(std::size_t domain_index, std::size_t level) const;
  std::vector<Point> image() const { return values_; }

private:
  std::vector<Point> domain_;
  std::size_t levels_;
  std::vector<Point> values_;
};

struct ClosedBallWitness {
  OpenSetExpr expr;
  InjectiveTable table;
};

/// Neighborhood of g missing every permutation moving at most n points:
/// the intersection of ConjNeq(1, t(a, alpha(a, k))) over a in supt(g),
/// k <= n. Throws InfiniteSupport or SupportTooSmall.
ClosedBallWitness closed_ball_witness(const ResiduePerm &g, std::size_t n);

/// Neighborhood of g inside which every permutation moving at most n points
/// must move x: intersection of ConjNeq(1, t(x, a)) over the least n+1
/// points a outside supt(g). Throws SupportTooLarge or PointNotInSupport.
OpenSetExpr point_support_witness(const ResiduePerm &g, Point x, std::size_t n);

struct IsolationWitness {
  OpenSetExpr expr;
  std::vector<ResiduePerm> candidates;
};

/// Shows g is isolated among permutations with exactly |supt(g)| moved
/// points: every such member of expr is in the finite candidate list.
/// Throws InfiniteSupport.
IsolationWitness isolation_witness(const ResiduePerm &g);

/// Result of brute-force checking a witness over a finite window.
struct WindowCheck {
  std::size_t enumerated = 0;
  std::vector<ResiduePerm> counterexamples;
  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Points of the transpositions t(p, q) in an intersection of
/// ConjNeq(1, t(p, q)) factors.
std::vector<std::pair<Point, Point>> transposition_factors(const OpenSetExpr &expr);

/// Enumerates every f supported in the window (support points of the
/// factors plus `extra` further points) with |supt(f)| <= n and reports
/// members of the witness.
WindowCheck check_closed_ball(const ClosedBallWitness &w, std::size_t n, std::size_t extra = 2);

/// Enumerates every f in the window with |supt(f)| = |supt(g)| and reports
/// members of the witness missing from the candidate list.
WindowCheck check_isolation(const IsolationWitness &w, const ResiduePerm &g,
                            std::size_t extra = 2);

} // namespace permtop

#endif // PERMTOP_WITNESS_HPP
