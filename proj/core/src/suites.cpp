#include "permtop/suites.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "permtop/centralizer.hpp"
#include "permtop/errors.hpp"
#include "permtop/finite_oracle.hpp"
#include "permtop/literals.hpp"
#include "permtop/sampling.hpp"
#include "permtop/selfnorm.hpp"
#include "permtop/tbeta.hpp"
#include "permtop/witness.hpp"

namespace permtop {

namespace {

using Probe = std::function<std::optional<std::string>(std::size_t)>;

Check run_check(const std::string &name, std::size_t samples, const Probe &probe)
{
  Check c{name, true, samples, ""};
  for (std::size_t i = 0; i < samples; ++i) {
    std::optional<std::string> bad;
    try {
      bad = probe(i);
    } catch (const std::exception &e) {
      bad = std::string("exception: ") + e.what();
    }
    if (bad) {
      c.passed = false;
      c.detail = "sample " + std::to_string(i) + ": " + *bad;
      break;
    }
  }
  return c;
}

std::vector<Check> suite_s2(const SuiteOptions &o)
{
  Sampler s(o.seed);
  std::vector<Check> out;

  out.push_back(run_check("group_laws", o.samples, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm f = s.residue_perm(), g = s.residue_perm(), h = s.residue_perm();
    if (compose(compose(f, g), h) != compose(f, compose(g, h)))
      return "associativity fails for " + to_literal(f) + ", " + to_literal(g) + ", " + to_literal(h);
    if (!compose(f, inverse(f)).is_identity() || !compose(inverse(f), f).is_identity())
      return "inverse law fails for " + to_literal(f);
    ResiduePerm fg = compose(f, g);
    for (Point x = 0; x < 200; ++x)
      if (fg(x) != f(g(x)))
        return "pointwise composition differs at " + std::to_string(x);
    return std::nullopt;
  }));

  out.push_back(run_check("support_laws", o.samples, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm f = s.residue_perm(), g = s.residue_perm();
    if (!compose(f, g).support().subset_of(f.support() | g.support()))
      return "supt(fg) not in supt(f) u supt(g) for " + to_literal(f) + ", " + to_literal(g);
    if (inverse(f).support() != f.support())
      return "supt(f^-1) != supt(f) for " + to_literal(f);
    if (conjugate(g, f).support() != image(g, f.support()))
      return "supt(g f g^-1) != g(supt f) for " + to_literal(f) + ", " + to_literal(g);
    return std::nullopt;
  }));

  out.push_back(run_check("t1_separator", o.samples, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm f = s.finite_perm(50, 8), g = s.finite_perm(50, 8);
    if (f == g)
      g = compose(g, ResiduePerm::transposition(0, 1));
    OpenSetExpr e = t1_separator(f, g);
    if (!member(e, g) || member(e, f))
      return "separator " + to_literal(e) + " fails for f=" + to_literal(f) + " g=" + to_literal(g);
    return std::nullopt;
  }));

  out.push_back(run_check("znez_witness", std::max<std::size_t>(1, o.samples / 10),
                          [&](std::size_t i) -> std::optional<std::string> {
    ZneZInstance inst;
    inst.anchor = s.uniform(0, 10);
    auto pairs = s.uniform(1, 3);
    for (std::int64_t k = 0; k < pairs; ++k) {
      ResiduePerm f = (i % 2 == 0 && k == 0) || s.uniform(0, 3) == 0 ? s.infinite_involution()
                                                                      : s.finite_involution(12);
      inst.pairs.push_back({f, s.coin() ? s.finite_perm(12, 6) : s.residue_perm()});
    }
    ZneZWitness w = znez_witness(inst);
    if (!znez_holds(inst, w.u))
      return "u = " + to_literal(w.u) + " fails";
    return std::nullopt;
  }));

  out.push_back(run_check("tp_open_witness", o.samples, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm b = s.coin() ? s.finite_involution(8) : s.infinite_involution(8);
    ResiduePerm a = s.residue_perm();
    ResiduePerm f = s.residue_perm();
    OpenSetExpr e = ConjNeq{a, b};
    if (!member(e, f))
      return std::nullopt;
    auto c = tp_open_witness(e, f);
    if (!satisfies(f, c))
      return "f violates its own constraints";
    std::set<Point> fixed;
    for (auto [p, q] : c)
      fixed.insert(q);
    std::vector<Point> free_pts;
    for (Point x = 0; x < 40 && free_pts.size() < 8; ++x)
      if (!fixed.count(x))
        free_pts.push_back(x);
    ResiduePerm h;
    for (std::size_t k = 0; k + 1 < free_pts.size(); k += 2)
      if (s.coin())
        h = compose(h, ResiduePerm::transposition(free_pts[k], free_pts[k + 1]));
    ResiduePerm g = compose(h, f);
    if (!satisfies(g, c) || !member(e, g))
      return "constraint-compatible " + to_literal(g) + " left " + to_literal(e);
    return std::nullopt;
  }));

  out.push_back(run_check("finite_coincidence", 2, [&](std::size_t i) -> std::optional<std::string> {
    FiniteGroup G = FiniteGroup::symmetric(3 + i);
    std::vector<MinNbhdMap> maps;
    for (const char *name : {"tp", "zpp", "zp", "zariski:2", "cent"}) {
      maps.push_back(min_neighborhoods(G, generate_subbase(G, SubbaseSpec::parse(name))));
      if (!topology_props(maps.back()).discrete)
        return std::string(name) + " is not discrete on S" + std::to_string(3 + i);
    }
    for (const auto &m : maps)
      if (compare(maps[0], m).verdict != Comparison::Verdict::Equal)
        return std::string("topologies differ on S") + std::to_string(3 + i);
    return std::nullopt;
  }));
  return out;
}

std::vector<Check> suite_s5(const SuiteOptions &o)
{
  Sampler s(o.seed);
  std::vector<Check> out;

  out.push_back(run_check("lemma33", 1, [&](std::size_t) -> std::optional<std::string> {
    Window W = Window::range(0, 6);
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
      std::vector<Point> A;
      for (Point x = 0; x < 6; ++x)
        if (mask >> x & 1)
          A.push_back(x);
      if (A.size() >= 3 && !lemma33_check(A, W))
        return "fails for A=" + to_literal(A);
    }
    if (lemma33_check({0, 1}, W))
      return std::string("two-point set should fail");
    return std::nullopt;
  }));

  out.push_back(run_check("double_centralizer_window", std::min<std::size_t>(o.samples, 8),
                          [&](std::size_t) -> std::optional<std::string> {
    std::vector<ResiduePerm> F;
    for (auto k = s.uniform(1, 3); k > 0; --k)
      F.push_back(s.finite_perm(4, 4));
    auto a = double_centralizer_window(F, Window::range(0, 7));
    auto b = double_centralizer_window(F, Window::range(0, 8));
    if (a.elements != b.elements)
      return std::string("window [0,7) and [0,8) disagree");
    EPSet core = EPSet::finite(a.core);
    for (const auto &e : a.elements)
      if (!e.support().subset_of(core))
        return to_literal(e) + " leaves the core";
    return std::nullopt;
  }));

  out.push_back(run_check("cent_not_open", o.samples, [&](std::size_t i) -> std::optional<std::string> {
    ResiduePerm g = i == 0 ? ResiduePerm::sigma() : s.infinite_involution();
    std::vector<Point> A = s.subset(10, static_cast<std::size_t>(s.uniform(0, 4)));
    Transposition t = cent_not_open_witness(g, A);
    if (std::count(A.begin(), A.end(), t.x) || std::count(A.begin(), A.end(), t.y) ||
        commutes(t.to_perm(), g))
      return "bad witness for g=" + to_literal(g) + " A=" + to_literal(A);
    return std::nullopt;
  }));

  const std::vector<std::int64_t> gens{0, 1, 2, 3, 4, 5, 6, 8, 9, 16};
  out.push_back(run_check("selfnorm_certify", o.samples, [&](std::size_t i) -> std::optional<std::string> {
    ThinSet A = i % 2 ? ThinSet::squares() : ThinSet::powers_of_two();
    SDElement h = s.sd_element(gens, 6, 3);
    Verdict v = self_normalizing_certify(h, A, 10);
    bool inside = h.shift == 0 && in_FA(h.word, A);
    if (v.kind == Verdict::Kind::Inconclusive || !verdict_holds(h, A, v) ||
        inside != (v.kind == Verdict::Kind::InSubgroup))
      return "h=" + to_literal(h) + " A=" + A.name() + " verdict " +
             std::string(verdict_name(v.kind));
    return std::nullopt;
  }));

  out.push_back(run_check("sd_group_laws", o.samples, [&](std::size_t) -> std::optional<std::string> {
    SDElement a = s.sd_element(gens, 4, 2), b = s.sd_element(gens, 4, 2), c = s.sd_element(gens, 4, 2);
    if (sd_mul(sd_mul(a, b), c) != sd_mul(a, sd_mul(b, c)))
      return "associativity fails at " + to_literal(a) + ", " + to_literal(b) + ", " + to_literal(c);
    if (sd_mul(a, sd_inv(a)) != SDElement{} || sd_mul(sd_inv(a), a) != SDElement{})
      return "inverse law fails at " + to_literal(a);
    if (evaluate_generators(express_in_generators(a)) != a)
      return "generator expression fails at " + to_literal(a);
    return std::nullopt;
  }));

  out.push_back(run_check("thin_sets", 2, [&](std::size_t i) -> std::optional<std::string> {
    ThinSet A = i ? ThinSet::squares() : ThinSet::powers_of_two();
    if (thin_check(A, i ? 100 : 64).violation)
      return A.name() + " exceeds its intersection bound";
    return std::nullopt;
  }));
  return out;
}

std::vector<Check> suite_s6(const SuiteOptions &o)
{
  Sampler s(o.seed);
  std::vector<Check> out;
  std::size_t n = std::min<std::size_t>(o.samples, 40);

  out.push_back(run_check("closed_ball", n, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm g;
    while (g.support().size() < 3 || g.support().size() > 5)
      g = s.finite_perm(10, 5);
    auto k = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(g.support().size()) - 1));
    auto w = closed_ball_witness(g, k);
    if (!member(w.expr, g))
      return "g outside its own witness " + to_literal(g);
    auto check = check_closed_ball(w, k, 1);
    if (!check.passed())
      return "g=" + to_literal(g) + " admits " + to_literal(check.counterexamples.front());
    return std::nullopt;
  }));

  out.push_back(run_check("isolation", n, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm g;
    while (g.support().size() > 3)
      g = s.finite_perm(8, 3);
    auto w = isolation_witness(g);
    auto check = check_isolation(w, g, 1);
    if (!check.passed())
      return "g=" + to_literal(g) + " misses " + to_literal(check.counterexamples.front());
    return std::nullopt;
  }));

  out.push_back(run_check("point_support", o.samples, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm g;
    while (g.is_identity())
      g = s.finite_perm(10, 4);
    auto supp = g.support().elements();
    Point x = supp[static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(supp.size()) - 1))];
    std::size_t k = supp.size() + static_cast<std::size_t>(s.uniform(0, 2));
    OpenSetExpr e = point_support_witness(g, x, k);
    if (!member(e, g))
      return "g outside its witness";
    for (int t = 0; t < 20; ++t) {
      ResiduePerm f = s.finite_perm(20, k);
      if (member(e, f) && f(x) == x)
        return to_literal(f) + " in witness of g=" + to_literal(g) + " fixes " + std::to_string(x);
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<Check> suite_s7(const SuiteOptions &o)
{
  Sampler s(o.seed);
  std::vector<Check> out;
  std::size_t n = std::min<std::size_t>(o.samples, 200);

  out.push_back(run_check("disjoint_mover_set", n, [&](std::size_t i) -> std::optional<std::string> {
    ResiduePerm f = i == 0 ? ResiduePerm::sigma() : s.infinite_residue_perm();
    EPSet U = disjoint_mover_set(f);
    if (U.is_finite() || !(image(f, U) & U).is_empty())
      return "bad U for " + to_literal(f);
    for (Point x = 0; x < 1000; ++x)
      if (U.contains(x) && U.contains(f(x)))
        return "f maps " + std::to_string(x) + " inside U";
    return std::nullopt;
  }));

  out.push_back(run_check("infinite_support_stabilizer", n, [&](std::size_t) -> std::optional<std::string> {
    Partition p = s.partition();
    ResiduePerm f = infinite_support_stabilizer(p);
    bool inside_piece = std::any_of(p.pieces().begin(), p.pieces().end(),
                                    [&](const EPSet &u) { return f.support().subset_of(u); });
    if (!stabilizes(f, p) || f.has_finite_support() || !inside_piece)
      return "bad stabilizer " + to_literal(f) + " for " + to_literal(p);
    return std::nullopt;
  }));

  out.push_back(run_check("finite_support_excluded", n, [&](std::size_t) -> std::optional<std::string> {
    ResiduePerm f = s.infinite_residue_perm();
    EPSet U = disjoint_mover_set(f);
    Partition p = Partition::validate({U, U.complement()});
    if (!nbhd_member(f, f, p))
      return std::string("f outside its own neighborhood");
    ResiduePerm g = s.finite_perm(30, 10);
    if (nbhd_member(g, f, p))
      return "finitely supported " + to_literal(g) + " in N(f) for f=" + to_literal(f);
    return std::nullopt;
  }));

  out.push_back(run_check("alpha_equivalence", n, [&](std::size_t) -> std::optional<std::string> {
    std::vector<Point> F = s.subset(12, static_cast<std::size_t>(s.uniform(0, 4)));
    std::vector<ResiduePerm> gs;
    for (int t = 0; t < 10; ++t)
      gs.push_back(s.coin() ? s.finite_perm(12, 6) : s.residue_perm());
    if (!alpha_basic_equivalence(F, gs))
      return "disagreement for F=" + to_literal(F);
    return std::nullopt;
  }));
  return out;
}

} // namespace

std::vector<std::string> suite_names() { return {"s2", "s5", "s6", "s7"}; }

std::vector<Check> run_suite(const std::string &name, const SuiteOptions &opts)
{
  if (name == "s2")
    return suite_s2(opts);
  if (name == "s5")
    return suite_s5(opts);
  if (name == "s6")
    return suite_s6(opts);
  if (name == "s7")
    return suite_s7(opts);
  throw Error(Errc::SpecMismatch, "unknown suite '" + name + "'");
}

} // namespace permtop
