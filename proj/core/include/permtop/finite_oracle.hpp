#ifndef PERMTOP_FINITE_ORACLE_HPP
#define PERMTOP_FINITE_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "permtop/finite_group.hpp"

namespace permtop {

/// Subset of a finite group, indexed by element.
using Subset = boost::dynamic_bitset<>;

struct SubbaseSpec {
  enum class Kind { Tp, Zpp, Zp, Zariski, CentralizerTop } kind;
  std::size_t max_word_len = 2; ///< Zariski only

  /// Parses tp, zpp, zp, zariski, zariski:L or cent. Throws SpecMismatch.
  static SubbaseSpec parse(const std::string &text);
  std::string name() const;
  friend bool operator==(const SubbaseSpec &, const SubbaseSpec &) = default;
};

/// Sub-basic open sets, deduplicated and sorted.
std::vector<Subset> generate_subbase(const FiniteGroup &G, const SubbaseSpec &spec);

/// g -> smallest open set containing g in an Alexandrov topology.
class MinNbhdMap {
public:
  /// Minimal neighborhoods of the topology generated by `family`.
  static MinNbhdMap from_family(std::size_t order, const std::vector<Subset> &family);
  /// Takes an explicit map. Throws BadNeighborhoods unless g in min(g) and
  /// h in min(g) implies min(h) within min(g).
  static MinNbhdMap from_sets(std::vector<Subset> sets);
  static MinNbhdMap discrete(std::size_t order);
  static MinNbhdMap antidiscrete(std::size_t order);

  std::size_t order() const noexcept { return sets_.size(); }
  const Subset &at(Elem g) const { return sets_[g]; }
  const std::vector<Subset> &sets() const noexcept { return sets_; }
  friend bool operator==(const MinNbhdMap &, const MinNbhdMap &) = default;

private:
  std::vector<Subset> sets_;
};

MinNbhdMap min_neighborhoods(const FiniteGroup &G, const std::vector<Subset> &family);

struct TopologyProps {
  bool discrete;
  bool t1;
};

TopologyProps topology_props(const MinNbhdMap &m);

struct Comparison {
  enum class Verdict { Equal, FirstCoarser, FirstFiner, Incomparable } verdict;
  /// g with min2(g) not inside min1(g): the first topology is not coarser.
  std::vector<Elem> not_coarser;
  /// g with min1(g) not inside min2(g): the first topology is not finer.
  std::vector<Elem> not_finer;
};

std::string comparison_name(Comparison::Verdict v);

/// Throws CarrierMismatch when the carriers differ.
Comparison compare(const MinNbhdMap &first, const MinNbhdMap &second);

struct ContinuityReport {
  bool sep_mult;
  bool sep_quotient;
  bool joint_mult;
  bool joint_quotient;
  bool conjugators;
  /// Names of the classes the topology belongs to, strongest first.
  std::vector<std::string> labels() const;
  /// The implications between the flags that hold for every topology.
  bool diagram_consistent() const;
};

ContinuityReport classify_continuity(const FiniteGroup &G, const MinNbhdMap &m);

/// True when every left and right translation is a homeomorphism.
bool shift_invariant(const FiniteGroup &G, const MinNbhdMap &m);

/// Whether u is a union of minimal neighborhoods.
bool is_open(const MinNbhdMap &m, const Subset &u);

} // namespace permtop

#endif // PERMTOP_FINITE_ORACLE_HPP
