#include "permtop/literals.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  void finish()
  {
    skip();
    if (pos_ != src_.size())
      fail("unexpected trailing input");
  }

  // ---- permutations

  ResiduePerm perm_product()
  {
    ResiduePerm acc = perm_power();
    while (accept('*'))
      acc = compose(acc, perm_power());
    return acc;
  }

  ResiduePerm perm_power()
  {
    ResiduePerm base = perm_atom();
    if (!accept('^'))
      return base;
    std::size_t at = pos_;
    std::int64_t k = integer();
    if (k < -1000 || k > 1000)
      fail_at(at, "exponent out of range");
    ResiduePerm step = k < 0 ? inverse(base) : base;
    ResiduePerm out;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
      out = compose(out, step);
    return out;
  }

  ResiduePerm perm_atom()
  {
    skip();
    if (peek() == '(')
      return cycles();
    std::size_t at = pos_;
    std::string word = identifier();
    if (word == "id")
      return ResiduePerm::identity();
    if (word == "sigma")
      return ResiduePerm::sigma();
    if (word == "res")
      return residue_literal(at);
    fail_at(at, word.empty() ? "expected a permutation" : "unknown permutation '" + word + "'");
  }

  ResiduePerm cycles()
  {
    ResiduePerm acc;
    while (true) {
      skip();
      if (peek() != '(')
        break;
      ++pos_;
      std::vector<Point> pts;
      std::set<Point> seen;
      while (!accept(')')) {
        std::size_t at = pos_;
        Point x = point();
        if (!seen.insert(x).second)
          fail_at(at, "repeated point " + std::to_string(x) + " in cycle");
        pts.push_back(x);
        accept(',');
      }
      if (pts.size() >= 2)
        acc = compose(acc, ResiduePerm::cycle(pts));
    }
    return acc;
  }

  ResiduePerm residue_literal(std::size_t at)
  {
    expect('[');
    std::int64_t m = integer();
    expect(';');
    std::vector<std::int64_t> shifts;
    do
      shifts.push_back(integer());
    while (accept(','));
    std::vector<std::pair<Point, Point>> patch;
    if (accept(';')) {
      keyword("patch");
      expect(':');
      skip();
      if (peek() != ']') {
        do {
          Point a = point();
          expect("->");
          patch.emplace_back(a, point());
        } while (accept(','));
      }
    }
    expect(']');
    return semantic(at, [&] { return ResiduePerm::validate(m, shifts, patch); });
  }

  // ---- sets

  std::vector<Point> points()
  {
    expect('{');
    std::vector<Point> out;
    skip();
    if (!accept('}')) {
      do
        out.push_back(point());
      while (accept(','));
      expect('}');
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  EPSet epset()
  {
    skip();
    std::size_t at = pos_;
    if (peek() == '{')
      return EPSet::finite(points());
    std::string word = identifier();
    if (word == "evens")
      return EPSet::residue_class(2, 0);
    if (word == "odds")
      return EPSet::residue_class(2, 1);
    if (word == "all")
      return EPSet::all();
    if (word == "empty")
      return EPSet::empty();
    if (word != "ep")
      fail_at(at, "expected a set literal");
    expect('[');
    std::int64_t m = integer();
    expect(';');
    std::vector<std::int64_t> residues;
    skip();
    if (peek() != ';' && peek() != ']') {
      do
        residues.push_back(integer());
      while (accept(','));
    }
    std::vector<Point> added, removed;
    while (accept(';')) {
      skip();
      if (accept('+'))
        added = points();
      else if (accept('-'))
        removed = points();
      else
        fail("expected +{...} or -{...}");
    }
    expect(']');
    if (m <= 0)
      fail_at(at, "modulus must be positive");
    return semantic(at, [&] { return EPSet::make(m, residues, added, removed); });
  }

  Partition partition()
  {
    skip();
    std::size_t at = pos_;
    keyword("part");
    expect('[');
    std::int64_t m = integer();
    std::vector<EPSet> pieces;
    while (accept(';'))
      pieces.push_back(epset());
    expect(']');
    return semantic(at, [&] { return Partition::validate(m, pieces); });
  }

  // ---- open sets

  GroupWord group_word()
  {
    skip();
    std::size_t at = pos_;
    std::vector<Letter> letters;
    do {
      skip();
      if (peek() == 'x' && !ident_char(peek(1))) {
        ++pos_;
        int e = 1;
        if (accept('^')) {
          std::size_t eat = pos_;
          std::int64_t k = integer();
          if (k != 1 && k != -1)
            fail_at(eat, "variable exponent must be 1 or -1");
          e = static_cast<int>(k);
        }
        letters.push_back(VarLetter{e});
      } else {
        letters.push_back(ConstLetter{perm_power()});
      }
    } while (accept('*'));
    return semantic(at, [&] { return GroupWord(letters); });
  }

  OpenSetExpr open_set()
  {
    skip();
    std::size_t at = pos_;
    std::string word = identifier();
    if (word == "conjneq" || word == "conjeq" || word == "dconjneq") {
      expect('(');
      ResiduePerm a = perm_product();
      expect(';');
      ResiduePerm b = perm_product();
      expect(')');
      return semantic(at, [&]() -> OpenSetExpr {
        if (word == "conjneq")
          return ConjNeq{a, b};
        if (word == "conjeq")
          return ConjEq{a, b};
        return DoubleConjNeq{a, b};
      });
    }
    if (word == "wordneq") {
      expect('(');
      GroupWord w = group_word();
      expect(')');
      return WordNeq{w};
    }
    if (word == "fiber") {
      expect('(');
      Point x = point();
      expect("->");
      Point y = point();
      expect(')');
      return PointFiber{x, y};
    }
    if (word == "fixes")
      return FixesAll{points()};
    if (word == "suppin")
      return SupportIn{points()};
    if (word == "and") {
      expect('(');
      std::vector<OpenSetExpr> parts;
      skip();
      if (!accept(')')) {
        do
          parts.push_back(open_set());
        while (accept(','));
        expect(')');
      }
      return Intersection{std::move(parts)};
    }
    fail_at(at, "expected an open-set expression");
  }

  // ---- free group

  FreeWord free_word()
  {
    skip();
    std::size_t at = pos_;
    if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      return {};
    }
    std::vector<Syllable> raw;
    do {
      skip();
      if (!accept('z'))
        fail("expected a generator z<k>");
      if (std::isspace(static_cast<unsigned char>(peek())))
        fail("generator index must follow z");
      std::int64_t g = integer();
      std::int64_t e = 1;
      if (accept('^'))
        e = integer();
      raw.push_back({g, e});
    } while (accept('*'));
    return semantic(at, [&] { return FreeWord::reduce(raw); });
  }

  SDElement element()
  {
    expect('(');
    FreeWord w = free_word();
    expect(';');
    std::int64_t n = integer();
    expect(')');
    return {w, n};
  }

  ThinSet thin_set()
  {
    skip();
    std::size_t at = pos_;
    std::string word = identifier();
    if (word == "pow2")
      return ThinSet::powers_of_two();
    if (word == "squares")
      return ThinSet::squares();
    if (word == "finite")
      return ThinSet::finite(integers_in_braces());
    fail_at(at, "expected pow2, squares or finite{...}");
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  static bool ident_char(char c)
  {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  char peek(std::size_t ahead = 0) const
  {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void skip()
  {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    skip();
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  void expect(std::string_view s)
  {
    skip();
    if (src_.substr(pos_, s.size()) != s)
      fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  void keyword(std::string_view kw)
  {
    skip();
    std::size_t at = pos_;
    if (identifier() != kw)
      fail_at(at, "expected '" + std::string(kw) + "'");
  }

  std::string identifier()
  {
    skip();
    std::size_t start = pos_;
    if (start < src_.size() && std::isalpha(static_cast<unsigned char>(src_[start]))) {
      while (pos_ < src_.size() && ident_char(src_[pos_]))
        ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  std::int64_t integer()
  {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+')
      ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (pos_ == digits)
      fail_at(start, "expected an integer");
    if (pos_ - digits > 18)
      fail_at(start, "integer too large");
    return std::stoll(std::string(src_.substr(start, pos_ - start)));
  }

  Point point()
  {
    skip();
    std::size_t at = pos_;
    Point x = integer();
    if (x < 0)
      fail_at(at, "points are non-negative");
    return x;
  }

  std::vector<std::int64_t> integers_in_braces()
  {
    expect('{');
    std::vector<std::int64_t> out;
    skip();
    if (!accept('}')) {
      do
        out.push_back(integer());
      while (accept(','));
      expect('}');
    }
    return out;
  }

  std::pair<std::size_t, std::size_t> location(std::size_t offset) const
  {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string &msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string &msg) const
  {
    auto [line, col] = location(offset);
    throw SyntaxError(line, col, msg);
  }

  template <typename Fn>
  auto semantic(std::size_t at, Fn &&fn) const -> decltype(fn())
  {
    try {
      return fn();
    } catch (const SyntaxError &) {
      throw;
    } catch (const Error &e) {
      auto [line, col] = location(at);
      throw Error(Errc::SemanticError,
                  std::to_string(line) + ":" + std::to_string(col) + ": " + e.what(), e.witness());
    }
  }
};

template <typename T, typename Fn>
T parse_whole(std::string_view text, Fn &&fn)
{
  Parser p(text);
  T value = fn(p);
  p.finish();
  return value;
}

std::string join_ints(const std::vector<std::int64_t> &xs, const char *sep = ", ")
{
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? sep : "") << xs[i];
  return os.str();
}

} // namespace

ResiduePerm parse_perm(std::string_view text)
{
  return parse_whole<ResiduePerm>(text, [](Parser &p) { return p.perm_product(); });
}

std::vector<Point> parse_points(std::string_view text)
{
  return parse_whole<std::vector<Point>>(text, [](Parser &p) { return p.points(); });
}

EPSet parse_epset(std::string_view text)
{
  return parse_whole<EPSet>(text, [](Parser &p) { return p.epset(); });
}

GroupWord parse_group_word(std::string_view text)
{
  return parse_whole<GroupWord>(text, [](Parser &p) { return p.group_word(); });
}

OpenSetExpr parse_open_set(std::string_view text)
{
  return parse_whole<OpenSetExpr>(text, [](Parser &p) { return p.open_set(); });
}

FreeWord parse_free_word(std::string_view text)
{
  return parse_whole<FreeWord>(text, [](Parser &p) { return p.free_word(); });
}

SDElement parse_element(std::string_view text)
{
  return parse_whole<SDElement>(text, [](Parser &p) { return p.element(); });
}

ThinSet parse_thin_set(std::string_view text)
{
  return parse_whole<ThinSet>(text, [](Parser &p) { return p.thin_set(); });
}

Partition parse_partition(std::string_view text)
{
  return parse_whole<Partition>(text, [](Parser &p) { return p.partition(); });
}

std::string to_literal(const ResiduePerm &f)
{
  if (f.is_identity())
    return "id";
  if (f == ResiduePerm::sigma())
    return "sigma";
  std::ostringstream os;
  if (f.has_finite_support()) {
    for (const auto &c : f.cycles())
      os << '(' << join_ints(c, " ") << ')';
    return os.str();
  }
  os << "res[" << f.modulus() << "; " << join_ints(f.shifts(), ",");
  auto patch = f.patch();
  if (!patch.empty()) {
    os << "; patch: ";
    for (std::size_t i = 0; i < patch.size(); ++i)
      os << (i ? ", " : "") << patch[i].first << "->" << patch[i].second;
  }
  os << ']';
  return os.str();
}

std::string to_literal(const std::vector<Point> &points)
{
  return "{" + join_ints(points) + "}";
}

std::string to_literal(const EPSet &s)
{
  std::ostringstream os;
  os << "ep[" << s.modulus() << "; " << join_ints(s.residues(), ",");
  if (!s.added().empty())
    os << "; +" << to_literal(s.added());
  if (!s.removed().empty())
    os << "; -" << to_literal(s.removed());
  os << ']';
  return os.str();
}

std::string to_literal(const GroupWord &w)
{
  std::string out;
  for (const auto &l : w.letters()) {
    if (!out.empty())
      out += " * ";
    if (const auto *v = std::get_if<VarLetter>(&l))
      out += v->exponent == 1 ? "x" : "x^-1";
    else
      out += to_literal(std::get<ConstLetter>(l).value);
  }
  return out;
}

std::string to_literal(const OpenSetExpr &e)
{
  return std::visit(
    [](const auto &n) -> std::string {
      using T = std::decay_t<decltype(n)>;
      if constexpr (std::is_same_v<T, WordNeq>)
        return "wordneq(" + to_literal(n.word) + ")";
      else if constexpr (std::is_same_v<T, ConjNeq>)
        return "conjneq(" + to_literal(n.a) + "; " + to_literal(n.b) + ")";
      else if constexpr (std::is_same_v<T, DoubleConjNeq>)
        return "dconjneq(" + to_literal(n.b) + "; " + to_literal(n.c) + ")";
      else if constexpr (std::is_same_v<T, PointFiber>)
        return "fiber(" + std::to_string(n.x) + "->" + std::to_string(n.y) + ")";
      else if constexpr (std::is_same_v<T, ConjEq>)
        return "conjeq(" + to_literal(n.a) + "; " + to_literal(n.b) + ")";
      else if constexpr (std::is_same_v<T, FixesAll>)
        return "fixes" + to_literal(n.points);
      else if constexpr (std::is_same_v<T, SupportIn>)
        return "suppin" + to_literal(n.points);
      else {
        std::string out = "and(";
        for (std::size_t i = 0; i < n.parts.size(); ++i)
          out += (i ? ", " : "") + to_literal(n.parts[i]);
        return out + ")";
      }
    },
    e.node());
}

std::string to_literal(const FreeWord &w)
{
  if (w.is_identity())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto &s : w.syllables()) {
    os << (first ? "" : " * ") << 'z' << s.generator;
    if (s.exponent != 1)
      os << '^' << s.exponent;
    first = false;
  }
  return os.str();
}

std::string to_literal(const SDElement &h)
{
  return "(" + to_literal(h.word) + "; " + std::to_string(h.shift) + ")";
}

std::string to_literal(const ThinSet &A) { return A.name(); }

std::string to_literal(const Partition &p)
{
  std::string out = "part[" + std::to_string(p.modulus());
  for (const auto &u : p.pieces())
    out += "; " + to_literal(u);
  return out + "]";
}

} // namespace permtop
