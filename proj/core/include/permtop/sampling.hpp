#ifndef PERMTOP_SAMPLING_HPP
#define PERMTOP_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "permtop/epset.hpp"
#include "permtop/residue_perm.hpp"
#include "permtop/selfnorm.hpp"
#include "permtop/tbeta.hpp"

namespace permtop {

/// Seeded generators for property checks. All draws go through one
/// std::mt19937_64 so a seed fixes the whole sequence.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64 &engine() noexcept { return rng_; }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Random subset of [0, n) of the given size, sorted.
  std::vector<Point> subset(std::int64_t n, std::size_t size);

  /// Permutation supported in [0, n): a uniform permutation of a random
  /// subset whose size is at most max_support.
  ResiduePerm finite_perm(std::int64_t n, std::size_t max_support);
  /// Product of random disjoint transpositions inside [0, n), at least one.
  ResiduePerm finite_involution(std::int64_t n);
  /// Involution of infinite support: pairs residues mod an even modulus,
  /// x <-> x + (s - r), then conjugates by a finite permutation of [0, conj_window).
  ResiduePerm infinite_involution(std::int64_t conj_window = 12);
  /// General element with an eventual rule, possibly infinite support:
  /// residue permutation with wrap-around counts summing to zero and a
  /// random head.
  ResiduePerm residue_perm(std::int64_t max_modulus = 8);
  /// residue_perm conditioned on infinite support.
  ResiduePerm infinite_residue_perm(std::int64_t max_modulus = 8);

  EPSet epset(std::int64_t max_modulus = 6, std::int64_t exceptions_below = 16);
  /// Partition with at most max_pieces nonempty pieces and even modulus at
  /// most max_modulus, with finite corrections near 0.
  Partition partition(std::size_t max_pieces = 5, std::int64_t max_modulus = 12);

  /// Reduced word of at most max_letters letters over the given generators.
  FreeWord free_word(const std::vector<std::int64_t> &generators, std::size_t max_letters);
  SDElement sd_element(const std::vector<std::int64_t> &generators, std::size_t max_letters,
                       std::int64_t max_shift);

private:
  std::mt19937_64 rng_;
};

} // namespace permtop

#endif // PERMTOP_SAMPLING_HPP
