// permtop: command-line front end for the permutation-topology toolkit.
//
// Exit codes: 0 every check passed, 1 a check failed (the report names the
// counterexample), 2 usage, syntax or precondition error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "permtop/centralizer.hpp"
#include "permtop/errors.hpp"
#include "permtop/finite_oracle.hpp"
#include "permtop/literals.hpp"
#include "permtop/report.hpp"
#include "permtop/sampling.hpp"
#include "permtop/selfnorm.hpp"
#include "permtop/suites.hpp"
#include "permtop/tbeta.hpp"
#include "permtop/witness.hpp"

using namespace permtop;

namespace {

struct Output {
  std::string format = "text";
  bool timings = false;
  std::string file;
};

void add_output_flags(CLI::App *sub, Output &out)
{
  sub->add_option("--format", out.format, "Report format")
    ->check(CLI::IsMember({"text", "json"}))
    ->capture_default_str();
  sub->add_flag("--timings", out.timings, "Include wall-clock timings (non-deterministic)");
  sub->add_option("--output", out.file, "Write the report to a file instead of stdout");
}

Check check(std::string name, bool passed, std::string detail = "", std::size_t samples = 1)
{
  return {std::move(name), passed, samples, std::move(detail)};
}

template <typename Fn>
double time_ms(Fn &&fn)
{
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- oracle

struct OracleArgs {
  std::string group = "sn:3";
  std::string subbases = "tp,zpp,zp,zariski,cent";
  std::size_t max_word_len = 2;
  bool classify = false;
};

FiniteGroup load_group(const std::string &spec)
{
  if (spec.rfind("sn:", 0) == 0) {
    std::string n = spec.substr(3);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || n.size() > 2)
      throw Error(Errc::SpecMismatch, "sn:N needs a small positive integer");
    return FiniteGroup::symmetric(std::stoul(n));
  }
  if (spec.rfind("table:", 0) == 0)
    return FiniteGroup::load_table(spec.substr(6));
  throw Error(Errc::SpecMismatch, "group must be sn:N or table:FILE");
}

Report run_oracle(const OracleArgs &a)
{
  Report r;
  r.command = "oracle";
  r.params = {{"group", a.group}, {"subbases", a.subbases},
              {"max_word_len", std::to_string(a.max_word_len)}};
  FiniteGroup G = load_group(a.group);

  std::vector<SubbaseSpec> specs;
  std::stringstream ss(a.subbases);
  for (std::string item; std::getline(ss, item, ',');) {
    SubbaseSpec spec = SubbaseSpec::parse(item);
    if (spec.kind == SubbaseSpec::Kind::Zariski && item == "zariski")
      spec.max_word_len = a.max_word_len;
    specs.push_back(spec);
  }
  if (specs.empty())
    throw Error(Errc::SpecMismatch, "no sub-bases given");

  // Every T1 topology on a finite group is discrete, and the restricted
  // Zariski topologies are T1 on S_n for n >= 3.
  const bool expect_discrete = G.degree() && *G.degree() >= 3;

  std::vector<MinNbhdMap> maps;
  for (const auto &spec : specs) {
    std::vector<Subset> family;
    r.timings_ms[spec.name()] = time_ms([&] {
      family = generate_subbase(G, spec);
      maps.push_back(min_neighborhoods(G, family));
    });
    TopologyProps props = topology_props(maps.back());
    std::string detail = "sets=" + std::to_string(family.size()) +
                         " discrete=" + (props.discrete ? "true" : "false") +
                         " t1=" + (props.t1 ? "true" : "false");
    r.verdicts.push_back(check(spec.name(), props.discrete == props.t1 &&
                                              (!expect_discrete || props.discrete),
                               detail));
    if (a.classify) {
      ContinuityReport c = classify_continuity(G, maps.back());
      std::string labels;
      for (const auto &l : c.labels())
        labels += (labels.empty() ? "" : "; ") + l;
      r.verdicts.push_back(check(spec.name() + ".continuity", c.diagram_consistent(),
                                 labels.empty() ? "no group-topology class" : labels));
    }
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      Comparison c = compare(maps[i], maps[j]);
      bool ok = !expect_discrete || c.verdict == Comparison::Verdict::Equal;
      r.verdicts.push_back(
        check("compare " + specs[i].name() + " " + specs[j].name(), ok, comparison_name(c.verdict)));
    }
  }
  r.witnesses.push_back({"order", std::to_string(G.order())});
  return r;
}

// ---- witness

struct WitnessArgs {
  std::string f, g, A = "{}";
  std::vector<std::string> pairs;
  std::int64_t anchor = 0;
  std::size_t n = 0;
  std::size_t extra = 2;
  std::string expr;
};

Report run_witness(const std::string &kind, const WitnessArgs &a)
{
  Report r;
  r.command = "witness " + kind;
  if (kind == "separate") {
    r.params = {{"f", a.f}, {"g", a.g}};
    ResiduePerm f = parse_perm(a.f), g = parse_perm(a.g);
    OpenSetExpr e = t1_separator(f, g);
    r.witnesses.push_back({"neighborhood", to_literal(e)});
    r.verdicts.push_back(check("contains g", member(e, g)));
    r.verdicts.push_back(check("excludes f", !member(e, f)));
  } else if (kind == "znez") {
    r.params = {{"anchor", std::to_string(a.anchor)}};
    ZneZInstance inst;
    inst.anchor = a.anchor;
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
      auto semi = a.pairs[i].find(';');
      if (semi == std::string::npos)
        throw Error(Errc::SemanticError, "--pair takes 'f ; g'");
      inst.pairs.push_back(
        {parse_perm(a.pairs[i].substr(0, semi)), parse_perm(a.pairs[i].substr(semi + 1))});
      r.params["pair" + std::to_string(i + 1)] = a.pairs[i];
    }
    ZneZWitness w = znez_witness(inst);
    r.witnesses.push_back({"u", to_literal(w.u)});
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
      const auto &[f, g] = inst.pairs[i];
      r.verdicts.push_back(check("inequality " + std::to_string(i + 1),
                                 conjugate(w.u, f) != conjugate(g, f)));
    }
    r.verdicts.push_back(check("moves anchor", w.u(a.anchor) != a.anchor));
    r.verdicts.push_back(check("finite support", w.u.has_finite_support()));
  } else if (kind == "closed-ball") {
    r.params = {{"g", a.g}, {"n", std::to_string(a.n)}, {"extra", std::to_string(a.extra)}};
    ResiduePerm g = parse_perm(a.g);
    ClosedBallWitness w = closed_ball_witness(g, a.n);
    r.witnesses.push_back({"neighborhood", to_literal(w.expr)});
    r.verdicts.push_back(check("contains g", member(w.expr, g)));
    WindowCheck wc = check_closed_ball(w, a.n, a.extra);
    r.verdicts.push_back(check("misses small supports", wc.passed(),
                               wc.passed() ? "" : to_literal(wc.counterexamples.front()),
                               wc.enumerated));
  } else if (kind == "isolation") {
    r.params = {{"g", a.g}, {"extra", std::to_string(a.extra)}};
    ResiduePerm g = parse_perm(a.g);
    IsolationWitness w = isolation_witness(g);
    r.witnesses.push_back({"neighborhood", to_literal(w.expr)});
    r.witnesses.push_back({"candidates", std::to_string(w.candidates.size())});
    r.verdicts.push_back(check("contains g", member(w.expr, g)));
    WindowCheck wc = check_isolation(w, g, a.extra);
    r.verdicts.push_back(check("candidate list complete", wc.passed(),
                               wc.passed() ? "" : to_literal(wc.counterexamples.front()),
                               wc.enumerated));
  } else if (kind == "cent-open") {
    r.params = {{"g", a.g}, {"A", a.A}};
    ResiduePerm g = parse_perm(a.g);
    std::vector<Point> A = parse_points(a.A);
    Transposition t = cent_not_open_witness(g, A);
    r.witnesses.push_back({"t", to_literal(t.to_perm())});
    bool avoids = std::find(A.begin(), A.end(), t.x) == A.end() &&
                  std::find(A.begin(), A.end(), t.y) == A.end();
    r.verdicts.push_back(check("fixes A", avoids));
    r.verdicts.push_back(check("does not commute with g", !commutes(t.to_perm(), g)));
  } else if (kind == "tp-open") {
    r.params = {{"expr", a.expr}, {"f", a.f}};
    OpenSetExpr e = parse_open_set(a.expr);
    ResiduePerm f = parse_perm(a.f);
    auto constraints = tp_open_witness(e, f);
    std::string lit;
    for (auto [p, q] : constraints)
      lit += (lit.empty() ? "" : ", ") + std::to_string(p) + "->" + std::to_string(q);
    r.witnesses.push_back({"constraints", "{" + lit + "}"});
    r.verdicts.push_back(check("f satisfies constraints", satisfies(f, constraints)));
  }
  return r;
}

// ---- selfnorm

struct SelfnormArgs {
  std::string set = "pow2";
  std::string element = "(1; 0)";
  std::size_t depth = 10;
  std::int64_t range = 64;
};

Report run_certify(const SelfnormArgs &a)
{
  Report r;
  r.command = "selfnorm certify";
  r.params = {{"set", a.set}, {"element", a.element}, {"depth", std::to_string(a.depth)}};
  ThinSet A = parse_thin_set(a.set);
  SDElement h = parse_element(a.element);
  Verdict v = self_normalizing_certify(h, A, a.depth);
  r.witnesses.push_back({"verdict", std::string(verdict_name(v.kind))});
  if (v.witness)
    r.witnesses.push_back({"generator", "z" + std::to_string(*v.witness)});
  if (v.conjugate)
    r.witnesses.push_back({"conjugate", to_literal(*v.conjugate)});
  r.verdicts.push_back(check("verdict re-verified", verdict_holds(h, A, v),
                             std::string(verdict_name(v.kind))));
  return r;
}

Report run_thin(const SelfnormArgs &a)
{
  Report r;
  r.command = "selfnorm thin";
  r.params = {{"set", a.set}, {"range", std::to_string(a.range)}};
  ThinSet A = parse_thin_set(a.set);
  ThinReport t = thin_check(A, a.range);
  r.verdicts.push_back(check("intersections within bound", !t.violation,
                             "max size " + std::to_string(t.max_size), t.entries.size()));
  return r;
}

// ---- tbeta

struct TbetaArgs {
  std::string f = "sigma";
  std::string partition = "part[2; evens; odds]";
  std::string F = "{}";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

Report run_tbeta(const std::string &kind, const TbetaArgs &a)
{
  Report r;
  r.command = "tbeta " + kind;
  if (kind == "closed") {
    r.params = {{"f", a.f}};
    ResiduePerm f = parse_perm(a.f);
    EPSet U = disjoint_mover_set(f);
    Partition p = Partition::validate({U, U.complement()});
    r.witnesses.push_back({"U", to_literal(U)});
    r.verdicts.push_back(check("U infinite", U.is_infinite()));
    r.verdicts.push_back(check("f(U) disjoint from U", (image(f, U) & U).is_empty()));
    bool pointwise = true;
    for (Point x = 0; x < 1000 && pointwise; ++x)
      pointwise = !(U.contains(x) && U.contains(f(x)));
    r.verdicts.push_back(check("pointwise on [0,1000)", pointwise));
    r.verdicts.push_back(check("f in its neighborhood", nbhd_member(f, f, p)));
  } else if (kind == "nowhere-dense") {
    r.params = {{"partition", a.partition}};
    Partition p = parse_partition(a.partition);
    ResiduePerm f = infinite_support_stabilizer(p);
    r.witnesses.push_back({"f", to_literal(f)});
    r.verdicts.push_back(check("stabilizes every piece", stabilizes(f, p)));
    r.verdicts.push_back(check("infinite support", !f.has_finite_support()));
    bool inside = std::any_of(p.pieces().begin(), p.pieces().end(),
                              [&](const EPSet &u) { return f.support().subset_of(u); });
    r.verdicts.push_back(check("support inside one piece", inside));
  } else if (kind == "alpha-check") {
    r.params = {{"F", a.F}, {"samples", std::to_string(a.samples)}};
    r.seed = a.seed;
    std::vector<Point> F = parse_points(a.F);
    Sampler s(a.seed);
    std::vector<ResiduePerm> gs;
    Point span = 4;
    for (auto x : F)
      span = std::max(span, x + 4);
    for (std::size_t i = 0; i < a.samples; ++i)
      gs.push_back(s.coin() ? s.finite_perm(span, static_cast<std::size_t>(span)) : s.residue_perm());
    r.verdicts.push_back(
      check("partition neighborhood equals pointwise stabilizer", alpha_basic_equivalence(F, gs),
            "", a.samples));
  }
  return r;
}

// ---- verify

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
};

Report run_verify(const VerifyArgs &a)
{
  Report r;
  r.command = "verify";
  r.seed = a.seed;
  r.params = {{"suite", a.suite}, {"samples", std::to_string(a.samples)}};
  std::vector<std::string> names =
    a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
  for (const auto &name : names) {
    std::vector<Check> checks;
    r.timings_ms[name] = time_ms([&] { checks = run_suite(name, {a.seed, a.samples}); });
    for (auto &c : checks) {
      c.name = name + "." + c.name;
      r.verdicts.push_back(std::move(c));
    }
  }
  return r;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Witness construction and brute-force checks for topologies on permutation groups"};
  app.require_subcommand(1);
  Output out;
  std::function<Report()> job;

  OracleArgs oa;
  auto *oracle = app.add_subcommand("oracle", "Sub-base topologies on a finite group");
  oracle->add_option("--group", oa.group, "sn:N or table:FILE")->capture_default_str();
  oracle->add_option("--subbases", oa.subbases, "Comma-separated: tp,zpp,zp,zariski[:L],cent")
    ->capture_default_str();
  oracle->add_option("--max-word-len", oa.max_word_len, "Word length bound for zariski")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  oracle->add_flag("--classify", oa.classify, "Also classify continuity of the group operations");
  add_output_flags(oracle, out);
  oracle->callback([&] { job = [&] { return run_oracle(oa); }; });

  WitnessArgs wa;
  auto *witness = app.add_subcommand("witness", "Construct and re-verify witnesses");
  witness->require_subcommand(1);
  auto add_witness = [&](const std::string &kind, const std::string &help) {
    auto *sub = witness->add_subcommand(kind, help);
    add_output_flags(sub, out);
    sub->callback([&, kind] { job = [&, kind] { return run_witness(kind, wa); }; });
    return sub;
  };
  auto *sep = add_witness("separate", "Neighborhood of g missing f");
  sep->add_option("--f", wa.f, "Permutation literal")->required();
  sep->add_option("--g", wa.g, "Permutation literal")->required();
  auto *znez = add_witness("znez", "Element of a restricted-Zariski neighborhood moving a point");
  znez->add_option("--pair", wa.pairs, "'f ; g' with f an involution (repeatable)")->required();
  znez->add_option("--anchor", wa.anchor, "Point to be moved")->capture_default_str();
  auto *ball = add_witness("closed-ball", "Neighborhood missing all supports of size <= n");
  ball->add_option("--g", wa.g, "Finitely supported permutation")->required();
  ball->add_option("--n", wa.n, "Support bound")->required();
  ball->add_option("--extra", wa.extra, "Extra window points")->capture_default_str();
  auto *iso = add_witness("isolation", "Isolation of g among equal-size supports");
  iso->add_option("--g", wa.g, "Finitely supported permutation")->required();
  iso->add_option("--extra", wa.extra, "Extra window points")->capture_default_str();
  auto *cent = add_witness("cent-open", "Transposition fixing A that does not commute with g");
  cent->add_option("--g", wa.g, "Permutation of infinite support")->required();
  cent->add_option("--A", wa.A, "Point set literal")->capture_default_str();
  auto *tp = add_witness("tp-open", "Pointwise constraints keeping f inside an open set");
  tp->add_option("--expr", wa.expr, "Open-set literal")->required();
  tp->add_option("--f", wa.f, "Permutation literal")->required();

  SelfnormArgs sa;
  auto *selfnorm = app.add_subcommand("selfnorm", "Self-normalizing free factors");
  selfnorm->require_subcommand(1);
  auto *certify = selfnorm->add_subcommand("certify", "Certify whether h normalizes F_A");
  certify->add_option("--set", sa.set, "pow2, squares or finite{...}")->capture_default_str();
  certify->add_option("--element", sa.element, "(word; shift)")->required();
  certify->add_option("--depth", sa.depth, "Generators of A to try")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  add_output_flags(certify, out);
  certify->callback([&] { job = [&] { return run_certify(sa); }; });
  auto *thin = selfnorm->add_subcommand("thin", "Bound the intersections of A with its translates");
  thin->add_option("--set", sa.set, "pow2, squares or finite{...}")->capture_default_str();
  thin->add_option("--range", sa.range, "Window [-R, R]")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  add_output_flags(thin, out);
  thin->callback([&] { job = [&] { return run_thin(sa); }; });

  TbetaArgs ta;
  auto *tbeta = app.add_subcommand("tbeta", "Partition-cover topology witnesses");
  tbeta->require_subcommand(1);
  auto *closed = tbeta->add_subcommand("closed", "Neighborhood of f missing finite supports");
  closed->add_option("--f", ta.f, "Permutation of infinite support")->capture_default_str();
  add_output_flags(closed, out);
  closed->callback([&] { job = [&] { return run_tbeta("closed", ta); }; });
  auto *nd = tbeta->add_subcommand("nowhere-dense", "Stabilizer of a cover with infinite support");
  nd->add_option("--partition", ta.partition, "part[M; ...]")->capture_default_str();
  add_output_flags(nd, out);
  nd->callback([&] { job = [&] { return run_tbeta("nowhere-dense", ta); }; });
  auto *alpha = tbeta->add_subcommand("alpha-check", "Singleton covers versus pointwise stabilizers");
  alpha->add_option("--F", ta.F, "Point set literal")->capture_default_str();
  alpha->add_option("--samples", ta.samples, "Sampled permutations")->capture_default_str();
  alpha->add_option("--seed", ta.seed, "Random seed")->capture_default_str();
  add_output_flags(alpha, out);
  alpha->callback([&] { job = [&] { return run_tbeta("alpha-check", ta); }; });

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "Run sampled property suites");
  verify->add_option("--suite", va.suite, "all, s2, s5, s6 or s7")
    ->check(CLI::IsMember({"all", "s2", "s5", "s6", "s7"}))
    ->capture_default_str();
  verify->add_option("--seed", va.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", va.samples, "Samples per check")->capture_default_str();
  add_output_flags(verify, out);
  verify->callback([&] { job = [&] { return run_verify(va); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  Report report;
  try {
    report = job();
  } catch (const Error &e) {
    std::cerr << "permtop: " << e.what() << "\n";
    return 2;
  }

  std::string text =
    emit_report(report, out.format == "json" ? Format::Json : Format::Text, out.timings);
  if (out.file.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.file);
    if (!f) {
      std::cerr << "permtop: cannot write " << out.file << "\n";
      return 2;
    }
    f << text;
  }
  return report.passed() ? 0 : 1;
}
