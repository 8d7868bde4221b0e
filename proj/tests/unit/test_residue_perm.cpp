#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "permtop/errors.hpp"
#include "permtop/residue_perm.hpp"
#include "permtop/sampling.hpp"

using namespace permtop;

namespace {

ResiduePerm t(Point x, Point y) { return ResiduePerm::transposition(x, y); }
const ResiduePerm sigma = ResiduePerm::sigma();
const ResiduePerm id;

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

// Raw definition evaluated point by point, independent of the canonical form.
struct RawPerm {
  std::int64_t m;
  std::vector<std::int64_t> shifts;
  std::map<Point, Point> patch;
  Point operator()(Point x) const
  {
    auto it = patch.find(x);
    return it != patch.end() ? it->second : x + shifts[x % m];
  }
};

enum class Outcome { Valid, BadResidueShift, NegativeImage, NotBijective };

Outcome brute_force(const RawPerm &f)
{
  std::set<std::int64_t> classes;
  for (std::int64_t r = 0; r < f.m; ++r)
    classes.insert(((r + f.shifts[r]) % f.m + f.m) % f.m);
  if (static_cast<std::int64_t>(classes.size()) != f.m)
    return Outcome::BadResidueShift;
  std::vector<int> hits(300, 0);
  for (Point x = 0; x < 300; ++x) {
    Point y = f(x);
    if (y < 0)
      return Outcome::NegativeImage;
    if (y < 300)
      ++hits[y];
  }
  for (Point y = 0; y < 250; ++y)
    if (hits[y] != 1)
      return Outcome::NotBijective;
  return Outcome::Valid;
}

} // namespace

TEST(Validate, SigmaFromRawData) { EXPECT_EQ(ResiduePerm::validate(2, {1, -1}), sigma); }

TEST(Validate, ConstantShiftOfOneIsNotBijective)
{
  // r -> r + 1 permutes the classes mod 2, so the residue condition holds;
  // the map x -> x + 1 misses 0.
  RawPerm raw{2, {1, 1}, {}};
  EXPECT_EQ(brute_force(raw), Outcome::NotBijective);
  EXPECT_EQ(code_of([] { (void)ResiduePerm::validate(2, {1, 1}); }), Errc::NotBijective);
}

TEST(Validate, CollidingClassesAreBadResidueShift)
{
  EXPECT_EQ(code_of([] { (void)ResiduePerm::validate(2, {0, 1}); }), Errc::BadResidueShift);
}

TEST(Validate, ShiftEvensByTwoMissesZero)
{
  RawPerm raw{2, {2, 0}, {}};
  EXPECT_EQ(brute_force(raw), Outcome::NotBijective);
  try {
    (void)ResiduePerm::validate(2, {2, 0});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotBijective);
    EXPECT_EQ(e.witness(), 0);
  }
}

TEST(Validate, BadModulusAndNegativeImage)
{
  EXPECT_EQ(code_of([] { (void)ResiduePerm::validate(0, {}); }), Errc::BadModulus);
  EXPECT_EQ(code_of([] { (void)ResiduePerm::validate(2, {0}); }), Errc::BadModulus);
  EXPECT_EQ(code_of([] { (void)ResiduePerm::validate(2, {-1, 1}); }), Errc::NegativeImage);
}

TEST(Validate, PatchRepairsShift)
{
  ResiduePerm f = ResiduePerm::validate(2, {0, 0}, {{0, 1}, {1, 0}});
  EXPECT_EQ(f, t(0, 1));
}

TEST(Validate, AgreesWithBruteForceOnRawData)
{
  Sampler s(21);
  int valid = 0;
  for (int i = 0; i < 3000; ++i) {
    RawPerm raw;
    if (s.coin()) {
      raw.m = s.coin() ? 2 : 4;
      for (std::int64_t r = 0; r < raw.m; ++r)
        raw.shifts.push_back(s.uniform(-3, 3));
    } else {
      // Data of a valid permutation, so that many samples are valid.
      ResiduePerm f = s.residue_perm(4);
      raw.m = f.modulus();
      raw.shifts = f.shifts();
      for (auto [x, y] : f.patch())
        raw.patch[x] = y;
    }
    for (auto k = s.uniform(0, 2); k > 0; --k)
      raw.patch[s.uniform(0, 7)] = s.uniform(0, 7);
    std::vector<std::pair<Point, Point>> patch(raw.patch.begin(), raw.patch.end());
    Outcome expected = brute_force(raw);
    Outcome got = Outcome::Valid;
    try {
      ResiduePerm f = ResiduePerm::validate(raw.m, raw.shifts, patch);
      for (Point x = 0; x < 300; ++x)
        ASSERT_EQ(f(x), raw(x));
      ++valid;
    } catch (const Error &e) {
      got = e.code() == Errc::BadResidueShift ? Outcome::BadResidueShift
          : e.code() == Errc::NegativeImage   ? Outcome::NegativeImage
                                              : Outcome::NotBijective;
    }
    ASSERT_EQ(got, expected) << "sample " << i;
  }
  EXPECT_GT(valid, 50);
}

TEST(Apply, Examples)
{
  EXPECT_EQ(sigma(4), 5);
  EXPECT_EQ(id(7), 7);
  EXPECT_EQ(t(0, 3)(3), 0);
}

TEST(Compose, Examples)
{
  EXPECT_EQ(compose(t(0, 1), t(1, 2)), ResiduePerm::cycle({0, 1, 2}));
  EXPECT_TRUE(compose(sigma, sigma).is_identity());
  ResiduePerm f = ResiduePerm::cycle({3, 7, 4});
  EXPECT_EQ(compose(f, id), f);
}

TEST(Compose, ModulusDividesLcm)
{
  ResiduePerm swap4 = ResiduePerm::validate(4, {2, 0, -2, 0});
  ResiduePerm six = ResiduePerm::validate(6, {1, -1, 1, -1, 0, 0});
  ResiduePerm c = compose(swap4, six);
  EXPECT_EQ(12 % c.modulus(), 0);
}

TEST(Inverse, Examples)
{
  EXPECT_EQ(inverse(sigma), sigma);
  EXPECT_EQ(inverse(ResiduePerm::cycle({0, 1, 2})), ResiduePerm::cycle({0, 2, 1}));
  EXPECT_TRUE(inverse(id).is_identity());
}

TEST(Support, Examples)
{
  EXPECT_EQ(t(2, 5).support(), EPSet::finite({2, 5}));
  EXPECT_TRUE(sigma.support().is_all());
  EXPECT_EQ(compose(sigma, t(0, 1)).support(), EPSet::finite({0, 1}).complement());
}

TEST(Equals, Examples)
{
  EXPECT_TRUE(equals(compose(sigma, sigma), id));
  EXPECT_TRUE(equals(t(0, 1), t(1, 0)));
  EXPECT_FALSE(equals(sigma, t(0, 1)));
}

TEST(Commutes, Examples)
{
  EXPECT_TRUE(commutes(t(0, 1), t(2, 3)));
  EXPECT_FALSE(commutes(t(0, 1), ResiduePerm::cycle({0, 1, 2})));
  EXPECT_TRUE(commutes(sigma, t(0, 1)));
}

TEST(IsInvolution, Examples)
{
  EXPECT_TRUE(is_involution(sigma));
  EXPECT_FALSE(is_involution(ResiduePerm::cycle({0, 1, 2})));
  EXPECT_TRUE(is_involution(id));
}

TEST(NoncommutingTransposition, Examples)
{
  EXPECT_EQ(noncommuting_transposition(ResiduePerm::cycle({0, 1, 2}), 0), (Transposition{0, 2}));
  EXPECT_EQ(noncommuting_transposition(sigma, 0), (Transposition{0, 2}));
  EXPECT_EQ(code_of([] { (void)noncommuting_transposition(id); }), Errc::IdentityInput);
  EXPECT_EQ(code_of([] { (void)noncommuting_transposition(t(0, 1), 5); }), Errc::FixedPointGiven);
}

TEST(Constructors, Errors)
{
  EXPECT_EQ(code_of([] { (void)ResiduePerm::cycle({0, 0, 1}); }), Errc::SemanticError);
  EXPECT_EQ(code_of([] { (void)t(2, 2); }), Errc::SemanticError);
  EXPECT_EQ(ResiduePerm::from_images({1, 2, 0}), ResiduePerm::cycle({0, 1, 2}));
}

TEST(Canonical, IdentityAndSigmaFields)
{
  EXPECT_EQ(id.modulus(), 2);
  EXPECT_EQ(id.shifts(), (std::vector<std::int64_t>{0, 0}));
  EXPECT_TRUE(id.head().empty());
  EXPECT_EQ(sigma.shifts(), (std::vector<std::int64_t>{1, -1}));
  // A rule written with a redundant period collapses to the least even one.
  EXPECT_EQ(ResiduePerm::validate(4, {1, -1, 1, -1}), sigma);
}

TEST(Cycles, FiniteOnly)
{
  EXPECT_EQ(compose(t(5, 6), ResiduePerm::cycle({2, 0, 1})).cycles(),
            (std::vector<std::vector<Point>>{{0, 1, 2}, {5, 6}}));
  EXPECT_EQ(code_of([] { (void)sigma.cycles(); }), Errc::NotFinite);
}

TEST(PermProperties, GroupLawsPointwise)
{
  Sampler s(22);
  for (int i = 0; i < 2000; ++i) {
    ResiduePerm f = s.residue_perm(), g = s.residue_perm(), h = s.residue_perm();
    ResiduePerm fg = compose(f, g), finv = inverse(f);
    for (Point x = 0; x < 300; ++x) {
      ASSERT_EQ(fg(x), f(g(x)));
      ASSERT_EQ(finv(f(x)), x);
    }
    ASSERT_EQ(compose(fg, h), compose(f, compose(g, h)));
    ASSERT_EQ(compose(f, id), f);
    ASSERT_EQ(compose(id, f), f);
    ASSERT_TRUE(compose(f, finv).is_identity());
  }
}

TEST(PermProperties, EqualityIsPointwiseEquality)
{
  Sampler s(23);
  for (int i = 0; i < 2000; ++i) {
    ResiduePerm f = s.residue_perm(6), g = s.coin() ? s.residue_perm(6) : compose(f, s.finite_perm(6, 2));
    Point bound = std::max(f.threshold(), g.threshold()) + 2 * std::lcm(f.modulus(), g.modulus());
    bool pointwise = true;
    for (Point x = 0; x < bound + 200; ++x)
      pointwise = pointwise && f(x) == g(x);
    ASSERT_EQ(f == g, pointwise);
  }
}

TEST(PermProperties, SupportLaws)
{
  Sampler s(24);
  for (int i = 0; i < 2000; ++i) {
    ResiduePerm f = s.residue_perm(), g = s.residue_perm();
    EPSet sf = f.support();
    for (Point x = 0; x < 300; ++x)
      ASSERT_EQ(sf.contains(x), f(x) != x);
    ASSERT_EQ(sf.is_finite(), f.has_finite_support());
    ASSERT_TRUE(compose(f, g).support().subset_of(sf | g.support()));
    ASSERT_EQ(conjugate(g, f).support(), image(g, sf));
  }
}

TEST(PermProperties, DisjointSupportsCommute)
{
  Sampler s(25);
  int disjoint = 0;
  for (int i = 0; i < 2000; ++i) {
    ResiduePerm f = s.finite_perm(12, 4);
    ResiduePerm g = s.coin() ? s.finite_perm(12, 4) : s.infinite_involution(1);
    if (f.support().disjoint_from(g.support())) {
      ++disjoint;
      ASSERT_TRUE(commutes(f, g));
    }
  }
  EXPECT_GT(disjoint, 50);
}

TEST(PermProperties, NoncommutingTranspositionNeverCommutes)
{
  Sampler s(26);
  for (int i = 0; i < 2000; ++i) {
    ResiduePerm f = s.residue_perm();
    if (f.is_identity())
      continue;
    Transposition tr = noncommuting_transposition(f);
    ASSERT_EQ(tr.x, *f.least_moved_point());
    ASSERT_FALSE(commutes(tr.to_perm(), f));
  }
}

TEST(PermProperties, ValidateRoundTrip)
{
  Sampler s(27);
  for (int i = 0; i < 1000; ++i) {
    ResiduePerm f = s.residue_perm();
    ASSERT_EQ(ResiduePerm::validate(f.modulus(), f.shifts(), f.patch()), f);
  }
}
