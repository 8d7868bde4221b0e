#include <gtest/gtest.h>

#include <algorithm>

#include "permtop/errors.hpp"
#include "permtop/sampling.hpp"
#include "permtop/tbeta.hpp"

using namespace permtop;

namespace {

ResiduePerm t(Point x, Point y) { return ResiduePerm::transposition(x, y); }
const ResiduePerm sigma = ResiduePerm::sigma();
const ResiduePerm id;

EPSet evens() { return EPSet::residue_class(2, 0); }
EPSet odds() { return EPSet::residue_class(2, 1); }
Partition parity() { return Partition::validate({evens(), odds()}); }

// 4k <-> 4k+2
ResiduePerm pair_swap() { return ResiduePerm::validate(4, {2, 0, -2, 0}); }

constexpr Point kRange = 1000;

// Piece index of each point of [0, kRange).
std::vector<int> labels(const Partition &p, Point range = kRange)
{
  std::vector<int> out(range, -1);
  for (std::size_t i = 0; i < p.pieces().size(); ++i)
    for (Point x = 0; x < range; ++x)
      if (p.pieces()[i].contains(x))
        out[x] = static_cast<int>(i);
  return out;
}

// f(U) = U for every piece, checked pointwise: f keeps every point in its
// piece. Pointwise preservation on a long range plus bijectivity gives
// equality of images for rules of small modulus.
bool raw_stabilizes(const ResiduePerm &f, const Partition &p)
{
  auto lab = labels(p, kRange + 64);
  for (Point x = 0; x < kRange; ++x)
    if (lab[x] != lab[f(x)])
      return false;
  return true;
}

bool raw_nbhd_member(const ResiduePerm &g, const ResiduePerm &f, const Partition &p)
{
  // g(U) = f(U) for all pieces iff f^-1 g keeps every point in its piece.
  return raw_stabilizes(compose(inverse(f), g), p);
}

Errc code_of(const std::function<void()> &fn)
{
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::SemanticError;
}

std::optional<std::int64_t> witness_of(const std::function<void()> &fn)
{
  try {
    fn();
  } catch (const Error &e) {
    return e.witness();
  }
  return std::nullopt;
}

} // namespace

TEST(ValidatePartition, Examples)
{
  EXPECT_NO_THROW(parity());
  EXPECT_EQ(code_of([] { (void)Partition::validate({evens(), evens()}); }), Errc::Overlap);
  EXPECT_EQ(witness_of([] { (void)Partition::validate({evens(), evens()}); }), 0);
  EXPECT_EQ(code_of([] { (void)Partition::validate({evens()}); }), Errc::Gap);
  EXPECT_EQ(witness_of([] { (void)Partition::validate({evens()}); }), 1);
}

TEST(ValidatePartition, ModulusErrors)
{
  EXPECT_EQ(code_of([] { (void)Partition::validate(3, {EPSet::all()}); }), Errc::OddModulus);
  EXPECT_EQ(code_of([] { (void)Partition::validate(4, {EPSet::residue_class(3, 0), EPSet::residue_class(3, 0).complement()}); }),
            Errc::BadModulus);
  Partition p = Partition::validate({EPSet::residue_class(3, 0), EPSet::residue_class(3, 0).complement()});
  EXPECT_EQ(p.modulus(), 6);
  EXPECT_EQ(Partition::validate({EPSet::all()}).modulus(), 2);
}

TEST(ValidatePartition, FiniteCorrections)
{
  EPSet low = EPSet::finite({0, 1, 2});
  EXPECT_NO_THROW((void)Partition::validate({low, low.complement()}));
  EXPECT_EQ(witness_of([&] { (void)Partition::validate({low, EPSet::at_least(2)}); }), 2);
  EXPECT_EQ(witness_of([&] { (void)Partition::validate({low, EPSet::at_least(5)}); }), 3);
}

TEST(Stabilizes, Examples)
{
  EXPECT_FALSE(stabilizes(sigma, parity()));
  EXPECT_TRUE(stabilizes(t(0, 2), parity()));
  EXPECT_TRUE(stabilizes(id, parity()));
}

TEST(NbhdMember, Examples)
{
  EXPECT_TRUE(nbhd_member(sigma, sigma, parity()));
  // g = sigma o t(0,1) fixes 0 and 1, so g(evens) = {0} u odds \ {1}.
  ResiduePerm g = compose(sigma, t(0, 1));
  EXPECT_EQ(image(g, evens()), EPSet::make(2, {1}, {0}, {1}));
  EXPECT_FALSE(nbhd_member(g, sigma, parity()));
  EXPECT_FALSE(nbhd_member(t(0, 1), sigma, parity()));
}

TEST(DisjointMover, Examples)
{
  EPSet u = disjoint_mover_set(sigma);
  EXPECT_TRUE(u.is_infinite());
  EXPECT_TRUE(u.subset_of(evens()));
  EXPECT_TRUE(image(sigma, u).subset_of(odds()));

  EPSet u2 = disjoint_mover_set(pair_swap());
  EXPECT_EQ(u2, EPSet::residue_class(4, 0));
  EXPECT_EQ(image(pair_swap(), u2), EPSet::residue_class(4, 2));

  EXPECT_EQ(code_of([] { (void)disjoint_mover_set(t(0, 1)); }), Errc::FiniteSupport);
}

TEST(InfiniteSupportStabilizer, Examples)
{
  ResiduePerm f = infinite_support_stabilizer(parity());
  EXPECT_EQ(f, pair_swap());
  EXPECT_TRUE(stabilizes(f, parity()));

  ResiduePerm g = infinite_support_stabilizer(Partition::validate({EPSet::all()}));
  EXPECT_TRUE(g.support().is_infinite());

  EPSet low = EPSet::finite({0, 1, 2});
  Partition p = Partition::validate({low, low.complement()});
  ResiduePerm h = infinite_support_stabilizer(p);
  EXPECT_TRUE(h.support().is_infinite());
  EXPECT_TRUE(h.support().subset_of(low.complement()));
  EXPECT_TRUE(stabilizes(h, p));
}

TEST(AlphaEquivalence, Examples)
{
  EXPECT_TRUE(alpha_basic_equivalence({0, 1}, {t(0, 1)}));
  Partition p = singleton_partition({0, 1});
  EXPECT_FALSE(stabilizes(t(0, 1), p));
  EXPECT_TRUE(stabilizes(t(5, 6), p));
  EXPECT_TRUE(alpha_basic_equivalence({0, 1}, {t(5, 6)}));
  EXPECT_TRUE(alpha_basic_equivalence({}, {sigma, t(0, 1), id}));
  EXPECT_EQ(singleton_partition({}).pieces().size(), 1u);
}

TEST(TbetaProperties, StabilizesMatchesPointwise)
{
  Sampler s(81);
  for (int i = 0; i < 1500; ++i) {
    Partition p = s.partition();
    ResiduePerm f = s.coin() ? s.residue_perm(6) : s.infinite_involution(8);
    ResiduePerm g = s.coin() ? f : compose(f, s.finite_perm(10, 3));
    ASSERT_EQ(stabilizes(f, p), raw_stabilizes(f, p));
    ASSERT_EQ(nbhd_member(g, f, p), raw_nbhd_member(g, f, p));
  }
}

TEST(TbetaProperties, RandomPartitionsAreCovers)
{
  Sampler s(82);
  for (int i = 0; i < 500; ++i) {
    Partition p = s.partition();
    ASSERT_EQ(p.modulus() % 2, 0);
    for (Point x = 0; x < 300; ++x) {
      int hits = 0;
      for (const auto &u : p.pieces())
        hits += u.contains(x);
      ASSERT_EQ(hits, 1);
    }
  }
}

TEST(TbetaProperties, DisjointMoverSetIsDisjointFromItsImage)
{
  Sampler s(83);
  for (int i = 0; i < 1000; ++i) {
    ResiduePerm f = s.coin() ? s.infinite_residue_perm(8) : s.infinite_involution(10);
    EPSet u = disjoint_mover_set(f);
    ASSERT_TRUE(u.is_infinite());
    ASSERT_TRUE(image(f, u).disjoint_from(u));
    for (Point x = 0; x < kRange; ++x)
      if (u.contains(x)) {
        ASSERT_FALSE(u.contains(f(x)));
      }
    // Any g agreeing with f on the cover {U, rest} must move every point of
    // U, so finitely supported g never qualify.
    Partition cover = Partition::validate({u, u.complement()});
    for (int j = 0; j < 5; ++j) {
      ResiduePerm g = s.finite_perm(20, 6);
      ASSERT_FALSE(nbhd_member(g, f, cover));
      ResiduePerm h = compose(f, g);
      if (nbhd_member(h, f, cover)) {
        ASSERT_TRUE(u.subset_of(h.support()));
      }
    }
  }
}

TEST(TbetaProperties, InfiniteSupportStabilizerPostcondition)
{
  Sampler s(84);
  for (int i = 0; i < 500; ++i) {
    Partition p = s.partition();
    ResiduePerm f = infinite_support_stabilizer(p);
    ASSERT_TRUE(raw_stabilizes(f, p));
    ASSERT_FALSE(f.support().residues().empty());
    bool inside_one = std::any_of(p.pieces().begin(), p.pieces().end(),
                                  [&](const EPSet &u) { return f.support().subset_of(u); });
    ASSERT_TRUE(inside_one);
  }
}

TEST(TbetaProperties, SingletonCoverNeighborhoodIsPointwiseStabilizer)
{
  Sampler s(85);
  for (int i = 0; i < 300; ++i) {
    auto F = s.subset(12, static_cast<std::size_t>(s.uniform(0, 4)));
    std::vector<ResiduePerm> samples;
    for (int j = 0; j < 20; ++j)
      samples.push_back(s.coin() ? s.finite_perm(12, 4) : s.residue_perm(4));
    ASSERT_TRUE(alpha_basic_equivalence(F, samples));
    Partition p = singleton_partition(F);
    for (const auto &g : samples) {
      bool fixes = std::all_of(F.begin(), F.end(), [&](Point x) { return g(x) == x; });
      ASSERT_EQ(stabilizes(g, p), fixes);
    }
  }
}
