#include "permtop/finite_oracle.hpp"

#include <set>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

Subset where(std::size_t order, auto &&pred)
{
  Subset s(order);
  for (Elem x = 0; x < order; ++x)
    if (pred(x))
      s.set(x);
  return s;
}

void zariski_words(const FiniteGroup &G, std::size_t depth, const std::vector<Elem> &value,
                   std::set<Subset> &out)
{
  const std::size_t n = G.order();
  std::vector<Elem> next(n);
  for (int e : {1, -1}) {
    for (Elem g = 0; g < n; ++g) {
      for (Elem x = 0; x < n; ++x)
        next[x] = G.mul(G.mul(value[x], e > 0 ? x : G.inv(x)), g);
      out.insert(where(n, [&](Elem x) { return next[x] != 0; }));
      if (depth > 1)
        zariski_words(G, depth - 1, next, out);
    }
  }
}

template <typename Map>
bool unary_continuous(const MinNbhdMap &m, Map &&h)
{
  const std::size_t n = m.order();
  for (Elem x = 0; x < n; ++x) {
    const Subset &target = m.at(h(x));
    const Subset &src = m.at(x);
    for (auto y = src.find_first(); y != Subset::npos; y = src.find_next(y))
      if (!target.test(h(static_cast<Elem>(y))))
        return false;
  }
  return true;
}

template <typename Map>
bool joint_continuous(const MinNbhdMap &m, Map &&op)
{
  const std::size_t n = m.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Subset &target = m.at(op(x, y));
      const Subset &mx = m.at(x);
      const Subset &my = m.at(y);
      for (auto a = mx.find_first(); a != Subset::npos; a = mx.find_next(a))
        for (auto b = my.find_first(); b != Subset::npos; b = my.find_next(b))
          if (!target.test(op(static_cast<Elem>(a), static_cast<Elem>(b))))
            return false;
    }
  }
  return true;
}

Subset translate(const FiniteGroup &G, const Subset &s, Elem by, bool left)
{
  Subset out(s.size());
  for (auto y = s.find_first(); y != Subset::npos; y = s.find_next(y))
    out.set(left ? G.mul(by, static_cast<Elem>(y)) : G.mul(static_cast<Elem>(y), by));
  return out;
}

} // namespace

SubbaseSpec SubbaseSpec::parse(const std::string &text)
{
  if (text == "tp")
    return {Kind::Tp};
  if (text == "zpp")
    return {Kind::Zpp};
  if (text == "zp")
    return {Kind::Zp};
  if (text == "cent")
    return {Kind::CentralizerTop};
  if (text == "zariski")
    return {Kind::Zariski, 2};
  if (text.rfind("zariski:", 0) == 0) {
    std::string len = text.substr(8);
    if (len.empty() || len.size() > 2 || len.find_first_not_of("0123456789") != std::string::npos ||
        std::stoul(len) == 0)
      throw Error(Errc::SpecMismatch, "zariski word length must be a positive integer");
    return {Kind::Zariski, std::stoul(len)};
  }
  throw Error(Errc::SpecMismatch, "unknown sub-base '" + text + "'");
}

std::string SubbaseSpec::name() const
{
  switch (kind) {
  case Kind::Tp: return "tp";
  case Kind::Zpp: return "zpp";
  case Kind::Zp: return "zp";
  case Kind::Zariski: return "zariski:" + std::to_string(max_word_len);
  case Kind::CentralizerTop: return "cent";
  }
  return "?";
}

std::vector<Subset> generate_subbase(const FiniteGroup &G, const SubbaseSpec &spec)
{
  const std::size_t n = G.order();
  std::set<Subset> family;
  auto conj = [&G](Elem x, Elem b) { return G.mul(G.mul(x, b), G.inv(x)); };

  switch (spec.kind) {
  case SubbaseSpec::Kind::Tp: {
    if (!G.degree())
      throw Error(Errc::SpecMismatch, "tp needs a permutation realization");
    std::size_t d = *G.degree();
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        family.insert(where(n, [&](Elem g) { return G.perm(g)[x] == y; }));
    break;
  }
  case SubbaseSpec::Kind::Zp:
    for (Elem b : G.involutions(true))
      for (Elem c : G.involutions(true))
        family.insert(where(n, [&](Elem x) { return conj(conj(x, c), b) != b; }));
    [[fallthrough]];
  case SubbaseSpec::Kind::Zpp:
    for (Elem b : G.involutions(true))
      for (Elem a = 0; a < n; ++a) {
        Elem target = conj(a, b);
        family.insert(where(n, [&](Elem x) { return conj(x, b) != target; }));
      }
    break;
  case SubbaseSpec::Kind::Zariski: {
    if (spec.max_word_len == 0)
      throw Error(Errc::SpecMismatch, "zariski word length must be positive");
    std::vector<Elem> unit(n, 0);
    zariski_words(G, spec.max_word_len, unit, family);
    break;
  }
  case SubbaseSpec::Kind::CentralizerTop:
    for (Elem b = 0; b < n; ++b)
      for (Elem a = 0; a < n; ++a) {
        Elem target = conj(a, b);
        family.insert(where(n, [&](Elem x) { return conj(x, b) == target; }));
      }
    break;
  }
  return {family.begin(), family.end()};
}

MinNbhdMap MinNbhdMap::from_family(std::size_t order, const std::vector<Subset> &family)
{
  MinNbhdMap m;
  m.sets_.assign(order, Subset(order).set());
  for (const auto &s : family) {
    if (s.size() != order)
      throw Error(Errc::CarrierMismatch, "family member has the wrong size");
    for (auto g = s.find_first(); g != Subset::npos; g = s.find_next(g))
      m.sets_[g] &= s;
  }
  return m;
}

MinNbhdMap MinNbhdMap::from_sets(std::vector<Subset> sets)
{
  const std::size_t n = sets.size();
  for (std::size_t g = 0; g < n; ++g) {
    if (sets[g].size() != n || !sets[g].test(g))
      throw Error(Errc::BadNeighborhoods, "min(g) must contain g", static_cast<std::int64_t>(g));
    for (auto h = sets[g].find_first(); h != Subset::npos; h = sets[g].find_next(h))
      if (!sets[h].is_subset_of(sets[g]))
        throw Error(Errc::BadNeighborhoods, "min(h) must lie in min(g) for h in min(g)",
                    static_cast<std::int64_t>(g));
  }
  MinNbhdMap m;
  m.sets_ = std::move(sets);
  return m;
}

MinNbhdMap MinNbhdMap::discrete(std::size_t order)
{
  MinNbhdMap m;
  for (std::size_t g = 0; g < order; ++g) {
    Subset s(order);
    s.set(g);
    m.sets_.push_back(std::move(s));
  }
  return m;
}

MinNbhdMap MinNbhdMap::antidiscrete(std::size_t order)
{
  MinNbhdMap m;
  m.sets_.assign(order, Subset(order).set());
  return m;
}

MinNbhdMap min_neighborhoods(const FiniteGroup &G, const std::vector<Subset> &family)
{
  return MinNbhdMap::from_family(G.order(), family);
}

TopologyProps topology_props(const MinNbhdMap &m)
{
  TopologyProps p{true, true};
  for (Elem g = 0; g < m.order(); ++g) {
    if (m.at(g).count() != 1) {
      p.discrete = false;
      p.t1 = false;
    }
  }
  return p;
}

std::string comparison_name(Comparison::Verdict v)
{
  switch (v) {
  case Comparison::Verdict::Equal: return "Equal";
  case Comparison::Verdict::FirstCoarser: return "FirstCoarser";
  case Comparison::Verdict::FirstFiner: return "FirstFiner";
  case Comparison::Verdict::Incomparable: return "Incomparable";
  }
  return "?";
}

Comparison compare(const MinNbhdMap &first, const MinNbhdMap &second)
{
  if (first.order() != second.order())
    throw Error(Errc::CarrierMismatch, "topologies live on different carriers");
  Comparison c{Comparison::Verdict::Equal, {}, {}};
  for (Elem g = 0; g < first.order(); ++g) {
    if (!second.at(g).is_subset_of(first.at(g)))
      c.not_coarser.push_back(g);
    if (!first.at(g).is_subset_of(second.at(g)))
      c.not_finer.push_back(g);
  }
  bool coarser = c.not_coarser.empty();
  bool finer = c.not_finer.empty();
  if (coarser && finer)
    c.verdict = Comparison::Verdict::Equal;
  else if (coarser)
    c.verdict = Comparison::Verdict::FirstCoarser;
  else if (finer)
    c.verdict = Comparison::Verdict::FirstFiner;
  else
    c.verdict = Comparison::Verdict::Incomparable;
  return c;
}

std::vector<std::string> ContinuityReport::labels() const
{
  std::vector<std::string> out;
  if (joint_quotient)
    out.push_back("topological group");
  if (joint_mult)
    out.push_back("paratopological group");
  if (sep_quotient && conjugators)
    out.push_back("[quasi]-topological group");
  if (sep_quotient)
    out.push_back("quasi-topological group");
  if (sep_mult && conjugators)
    out.push_back("[semi]-topological group");
  if (sep_mult)
    out.push_back("semitopological group");
  return out;
}

bool ContinuityReport::diagram_consistent() const
{
  auto implies = [](bool a, bool b) { return !a || b; };
  return implies(joint_quotient, joint_mult) && implies(joint_quotient, sep_quotient) &&
         implies(joint_quotient, conjugators) && implies(joint_mult, sep_mult) &&
         implies(sep_quotient, sep_mult);
}

ContinuityReport classify_continuity(const FiniteGroup &G, const MinNbhdMap &m)
{
  if (G.order() != m.order())
    throw Error(Errc::CarrierMismatch, "map and group have different orders");
  const std::size_t n = G.order();
  ContinuityReport r{true, true, true, true, true};

  for (Elem a = 0; a < n && r.sep_mult; ++a)
    r.sep_mult = unary_continuous(m, [&](Elem x) { return G.mul(x, a); }) &&
                 unary_continuous(m, [&](Elem x) { return G.mul(a, x); });
  for (Elem a = 0; a < n && r.sep_quotient; ++a)
    r.sep_quotient = unary_continuous(m, [&](Elem x) { return G.mul(x, G.inv(a)); }) &&
                     unary_continuous(m, [&](Elem y) { return G.mul(a, G.inv(y)); });
  for (Elem a = 0; a < n && r.conjugators; ++a)
    r.conjugators = unary_continuous(m, [&](Elem x) { return G.mul(G.mul(x, a), G.inv(x)); });
  r.joint_mult = joint_continuous(m, [&](Elem x, Elem y) { return G.mul(x, y); });
  r.joint_quotient = joint_continuous(m, [&](Elem x, Elem y) { return G.mul(x, G.inv(y)); });
  return r;
}

bool shift_invariant(const FiniteGroup &G, const MinNbhdMap &m)
{
  for (Elem s = 0; s < G.order(); ++s)
    for (Elem g = 0; g < G.order(); ++g)
      if (translate(G, m.at(g), s, true) != m.at(G.mul(s, g)) ||
          translate(G, m.at(g), s, false) != m.at(G.mul(g, s)))
        return false;
  return true;
}

bool is_open(const MinNbhdMap &m, const Subset &u)
{
  for (auto g = u.find_first(); g != Subset::npos; g = u.find_next(g))
    if (!m.at(static_cast<Elem>(g)).is_subset_of(u))
      return false;
  return true;
}

} // namespace permtop
