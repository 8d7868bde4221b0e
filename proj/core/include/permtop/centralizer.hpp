#ifndef PERMTOP_CENTRALIZER_HPP
#define PERMTOP_CENTRALIZER_HPP

#include <vector>

#include "permtop/residue_perm.hpp"
#include "permtop/window.hpp"

namespace permtop {

/// f in c(F): f commutes with every element of F.
bool in_centralizer(const ResiduePerm &f, const std::vector<ResiduePerm> &F);

/// f in c(G(A)), decided on the transpositions of A, which generate G(A).
/// Throws BadCardinality when |A| < 2.
bool in_subgroup_centralizer(const ResiduePerm &f, const std::vector<Point> &A);

/// Brute force over S(W): commuting with all of S(A) is equivalent to fixing
/// A pointwise. Holds for |A| >= 3; fails for |A| = 2. Throws WindowTooSmall
/// unless A is inside W.
bool lemma33_check(const std::vector<Point> &A, const Window &W);

struct DoubleCentralizer {
  /// Finite set A containing every support, |A| >= 3.
  std::vector<Point> core;
  /// c(c(F)) computed inside S(W), sorted by one-line notation on W.
  std::vector<ResiduePerm> elements;
};

/// Double centralizer of a finite set of finitely supported permutations,
/// computed within S(W). Throws WindowTooSmall when W does not contain the
/// supports padded to three points plus three further points.
DoubleCentralizer double_centralizer_window(const std::vector<ResiduePerm> &F, const Window &W);

/// Centralizer of F inside S(W), in lexicographic one-line order. Throws
/// WindowTooSmall if some support leaves W.
std::vector<LocalPerm> window_centralizer(const std::vector<LocalPerm> &F, std::size_t n);

/// For g of infinite support and finite A: t(x, y) with x the least point of
/// supt(g) \ A and y the least point outside A u {x, g(x)}. t fixes A
/// pointwise and does not commute with g, so no pointwise neighborhood of
/// the identity lies inside c(g). Throws FiniteSupport.
Transposition cent_not_open_witness(const ResiduePerm &g, const std::vector<Point> &A);

} // namespace permtop

#endif // PERMTOP_CENTRALIZER_HPP
