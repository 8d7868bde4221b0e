#ifndef PERMTOP_TBETA_HPP
#define PERMTOP_TBETA_HPP

#include <cstdint>
#include <vector>

#include "permtop/epset.hpp"
#include "permtop/residue_perm.hpp"

namespace permtop {

/// Finite cover of N by pairwise disjoint eventually periodic pieces whose
/// moduli divide one even modulus.
class Partition {
public:
  /// Throws OddModulus, BadModulus (a piece period not dividing M),
  /// Overlap(x) or Gap(x) with x the least offending point.
  static Partition validate(std::int64_t modulus, std::vector<EPSet> pieces);
  /// Same, with M the least even common multiple of the piece periods.
  static Partition validate(std::vector<EPSet> pieces);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<EPSet> &pieces() const noexcept { return pieces_; }
  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::int64_t modulus_ = 2;
  std::vector<EPSet> pieces_;
};

/// f(U) = U for every piece U.
bool stabilizes(const ResiduePerm &f, const Partition &p);

/// g(U) = f(U) for every piece U.
bool nbhd_member(const ResiduePerm &g, const ResiduePerm &f, const Partition &p);

/// Infinite U with f(U) disjoint from U. Throws FiniteSupport.
EPSet disjoint_mover_set(const ResiduePerm &f);

/// Element of infinite support inside one infinite piece that maps every
/// piece onto itself: x <-> x + M on one residue class mod 2M of that piece.
ResiduePerm infinite_support_stabilizer(const Partition &p);

/// The cover by the singletons of F and the rest of N.
Partition singleton_partition(const std::vector<Point> &F);

/// For each sample g: g(U) = U on the singleton cover of F exactly when g
/// fixes F pointwise. False on the first disagreement.
bool alpha_basic_equivalence(const std::vector<Point> &F, const std::vector<ResiduePerm> &samples);

} // namespace permtop

#endif // PERMTOP_TBETA_HPP
