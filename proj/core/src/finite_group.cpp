#include "permtop/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

std::vector<std::uint8_t> compose(const std::vector<std::uint8_t> &a,
                                  const std::vector<std::uint8_t> &b)
{
  std::vector<std::uint8_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[b[i]];
  return c;
}

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<std::vector<Token>> tokenize_lines(std::istream &in)
{
  std::vector<std::vector<Token>> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#')
        break;
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      toks.push_back({raw.substr(start, i - start), lineno, start + 1});
    }
    if (!toks.empty())
      lines.push_back(std::move(toks));
  }
  return lines;
}

bool is_index(const std::string &s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::size_t to_index(const Token &t)
{
  if (!is_index(t.text) || t.text.size() > 9)
    throw SyntaxError(t.line, t.col, "expected an element index, got '" + t.text + "'");
  return std::stoul(t.text);
}

} // namespace

Elem perm_rank(const std::vector<std::uint8_t> &p)
{
  std::size_t n = p.size();
  Elem rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Elem smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      smaller += p[j] < p[i];
    rank = rank * static_cast<Elem>(n - i) + smaller;
  }
  return rank;
}

FiniteGroup FiniteGroup::symmetric(std::size_t n)
{
  if (n == 0)
    throw Error(Errc::BadCardinality, "sn needs n >= 1");
  if (n > kMaxDegree)
    throw Error(Errc::TooLarge, "sn(" + std::to_string(n) + ") exceeds degree 8");

  FiniteGroup g;
  g.degree_ = n;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    g.perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  g.order_ = g.perms_.size();

  g.inverse_.resize(g.order_);
  for (Elem a = 0; a < g.order_; ++a) {
    std::vector<std::uint8_t> q(n);
    for (std::size_t i = 0; i < n; ++i)
      q[g.perms_[a][i]] = static_cast<std::uint8_t>(i);
    g.inverse_[a] = perm_rank(q);
  }
  if (g.order_ <= kTableLimit) {
    g.table_.resize(g.order_ * g.order_);
    for (Elem a = 0; a < g.order_; ++a)
      for (Elem b = 0; b < g.order_; ++b)
        g.table_[a * g.order_ + b] = perm_rank(compose(g.perms_[a], g.perms_[b]));
  }
  return g;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table,
                                    std::vector<std::string> names)
{
  if (order == 0)
    throw Error(Errc::NotAGroup, "order must be positive");
  if (order > kCheckedTableLimit)
    throw Error(Errc::TooLarge, "Cayley tables are limited to order 256");
  if (table.size() != order * order)
    throw Error(Errc::NotAGroup, "table needs order^2 entries");
  if (!names.empty() && names.size() != order)
    throw Error(Errc::NotAGroup, "name count differs from the order");

  auto at = [&](Elem a, Elem b) { return table[a * order + b]; };
  for (Elem x : table)
    if (x >= order)
      throw Error(Errc::NotAGroup, "entry out of range", x);
  for (Elem a = 0; a < order; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw Error(Errc::NotAGroup, "index 0 is not the identity", a);

  std::vector<Elem> inverse(order);
  for (Elem a = 0; a < order; ++a) {
    std::vector<bool> row(order), col(order);
    for (Elem b = 0; b < order; ++b) {
      row[at(a, b)] = true;
      col[at(b, a)] = true;
      if (at(a, b) == 0)
        inverse[a] = b;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw Error(Errc::NotAGroup, "row or column is not a permutation", a);
  }
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      for (Elem c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(Errc::NotAGroup, "not associative at (" + std::to_string(a) + ", " +
                                           std::to_string(b) + ", " + std::to_string(c) + ")",
                      a);

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.names_ = std::move(names);
  return g;
}

FiniteGroup FiniteGroup::parse_table(std::istream &in)
{
  auto lines = tokenize_lines(in);
  if (lines.empty())
    throw SyntaxError(1, 1, "empty Cayley table");
  if (lines[0].size() != 1)
    throw SyntaxError(lines[0][1].line, lines[0][1].col, "first line holds only the order");
  std::size_t order = to_index(lines[0][0]);

  std::size_t next = 1;
  std::vector<std::string> names;
  if (next < lines.size() &&
      std::any_of(lines[next].begin(), lines[next].end(),
                  [](const Token &t) { return !is_index(t.text); })) {
    for (const auto &t : lines[next])
      names.push_back(t.text);
    ++next;
  }

  std::vector<Elem> table;
  for (; next < lines.size(); ++next)
    for (const auto &t : lines[next])
      table.push_back(static_cast<Elem>(to_index(t)));
  return from_table(order, std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::load_table(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::SemanticError, "cannot open " + path);
  return parse_table(in);
}

Elem FiniteGroup::mul(Elem a, Elem b) const
{
  if (!table_.empty())
    return table_[a * order_ + b];
  return perm_rank(compose(perms_[a], perms_[b]));
}

Elem FiniteGroup::index_of(const std::vector<std::uint8_t> &p) const
{
  if (!degree_ || p.size() != *degree_)
    throw Error(Errc::SpecMismatch, "not a permutation of the realization's degree");
  return perm_rank(p);
}

std::string FiniteGroup::name(Elem a) const
{
  if (!names_.empty())
    return names_[a];
  if (degree_) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < perms_[a].size(); ++i)
      os << (i ? " " : "") << int(perms_[a][i]);
    os << ']';
    return os.str();
  }
  return std::to_string(a);
}

std::vector<Elem> FiniteGroup::involutions(bool include_identity) const
{
  std::vector<Elem> out;
  for (Elem a = 0; a < order_; ++a)
    if (mul(a, a) == 0 && (a != 0 || include_identity))
      out.push_back(a);
  return out;
}

} // namespace permtop
