#include "permtop/selfnorm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "permtop/errors.hpp"

namespace permtop {

namespace {

std::int64_t isqrt(std::int64_t x)
{
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x)
    --r;
  while ((r + 1) * (r + 1) <= x)
    ++r;
  return r;
}

std::size_t divisor_count(std::int64_t n)
{
  n = n < 0 ? -n : n;
  std::size_t count = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0)
      count += (d * d == n) ? 1 : 2;
  }
  return count;
}

bool letters_in(const FreeWord &w, const ThinSet &A)
{
  for (const auto &s : w.syllables())
    if (!A.contains(s.generator))
      return false;
  return true;
}

bool outside_FA(const SDElement &e, const ThinSet &A)
{
  return e.shift != 0 || !letters_in(e.word, A);
}

} // namespace

FreeWord FreeWord::reduce(const std::vector<Syllable> &raw)
{
  FreeWord w;
  for (const auto &s : raw) {
    if (s.exponent == 0)
      throw Error(Errc::ZeroExponent, "syllable z" + std::to_string(s.generator) + "^0");
    if (!w.syllables_.empty() && w.syllables_.back().generator == s.generator) {
      w.syllables_.back().exponent += s.exponent;
      if (w.syllables_.back().exponent == 0)
        w.syllables_.pop_back();
    } else {
      w.syllables_.push_back(s);
    }
  }
  return w;
}

FreeWord FreeWord::generator(std::int64_t k, std::int64_t exponent)
{
  return reduce({{k, exponent}});
}

std::int64_t FreeWord::length() const noexcept
{
  std::int64_t n = 0;
  for (const auto &s : syllables_)
    n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

FreeWord multiply(const FreeWord &v, const FreeWord &w)
{
  std::vector<Syllable> raw = v.syllables();
  raw.insert(raw.end(), w.syllables().begin(), w.syllables().end());
  return FreeWord::reduce(raw);
}

FreeWord invert(const FreeWord &v)
{
  std::vector<Syllable> raw;
  for (auto it = v.syllables().rbegin(); it != v.syllables().rend(); ++it)
    raw.push_back({it->generator, -it->exponent});
  return FreeWord::reduce(raw);
}

FreeWord shift(const FreeWord &v, std::int64_t n)
{
  std::vector<Syllable> raw;
  for (const auto &s : v.syllables())
    raw.push_back({s.generator + n, s.exponent});
  return FreeWord::reduce(raw);
}

std::set<std::int64_t> letters(const FreeWord &v)
{
  std::set<std::int64_t> out;
  for (const auto &s : v.syllables())
    out.insert(s.generator);
  return out;
}

SDElement sd_mul(const SDElement &a, const SDElement &b)
{
  return {multiply(a.word, shift(b.word, a.shift)), a.shift + b.shift};
}

SDElement sd_inv(const SDElement &h)
{
  return {shift(invert(h.word), -h.shift), -h.shift};
}

SDElement sd_conj(const SDElement &h, const SDElement &w)
{
  return sd_mul(sd_mul(h, w), sd_inv(h));
}

std::vector<GeneratorPower> express_in_generators(const SDElement &h)
{
  using W = GeneratorPower::Which;
  std::vector<GeneratorPower> out;
  auto push = [&out](W which, std::int64_t e) {
    if (e == 0)
      return;
    if (!out.empty() && out.back().which == which) {
      out.back().exponent += e;
      if (out.back().exponent == 0)
        out.pop_back();
    } else {
      out.push_back({which, e});
    }
  };
  for (const auto &s : h.word.syllables()) {
    push(W::Shift, s.generator);
    push(W::Z0, s.exponent);
    push(W::Shift, -s.generator);
  }
  push(W::Shift, h.shift);
  return out;
}

SDElement evaluate_generators(const std::vector<GeneratorPower> &word)
{
  SDElement acc;
  for (const auto &g : word) {
    SDElement step = g.which == GeneratorPower::Which::Shift
                       ? SDElement{FreeWord{}, g.exponent}
                       : SDElement{FreeWord::generator(0, g.exponent), 0};
    acc = sd_mul(acc, step);
  }
  return acc;
}

ThinSet ThinSet::powers_of_two()
{
  ThinSet s;
  s.kind_ = Kind::PowersOfTwo;
  return s;
}

ThinSet ThinSet::squares()
{
  ThinSet s;
  s.kind_ = Kind::Squares;
  return s;
}

ThinSet ThinSet::finite(std::vector<std::int64_t> elements)
{
  ThinSet s;
  s.kind_ = Kind::ExplicitFinite;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  s.elements_ = std::move(elements);
  return s;
}

ThinSet ThinSet::stream(std::string name, std::function<std::int64_t(std::size_t)> nth,
                        std::function<std::size_t(std::int64_t)> intersection_bound)
{
  ThinSet s;
  s.kind_ = Kind::Stream;
  s.name_ = std::move(name);
  s.nth_ = std::move(nth);
  s.bound_ = std::move(intersection_bound);
  return s;
}

std::string ThinSet::name() const
{
  switch (kind_) {
  case Kind::PowersOfTwo: return "pow2";
  case Kind::Squares: return "squares";
  case Kind::Stream: return name_;
  case Kind::ExplicitFinite: break;
  }
  std::ostringstream os;
  os << "finite{";
  for (std::size_t i = 0; i < elements_.size(); ++i)
    os << (i ? "," : "") << elements_[i];
  os << "}";
  return os.str();
}

bool ThinSet::contains(std::int64_t x) const
{
  switch (kind_) {
  case Kind::PowersOfTwo: return x > 0 && (x & (x - 1)) == 0;
  case Kind::Squares: return x >= 0 && isqrt(x) * isqrt(x) == x;
  case Kind::ExplicitFinite: return std::binary_search(elements_.begin(), elements_.end(), x);
  case Kind::Stream:
    for (std::size_t i = 0;; ++i) {
      std::int64_t v = nth_(i);
      if (v == x)
        return true;
      if (v > x)
        return false;
    }
  }
  return false;
}

std::vector<std::int64_t> ThinSet::first(std::size_t count) const
{
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    switch (kind_) {
    case Kind::PowersOfTwo:
      if (i >= 62)
        return out;
      out.push_back(std::int64_t{1} << i);
      break;
    case Kind::Squares: out.push_back(static_cast<std::int64_t>(i * i)); break;
    case Kind::ExplicitFinite:
      if (i >= elements_.size())
        return out;
      out.push_back(elements_[i]);
      break;
    case Kind::Stream: out.push_back(nth_(i)); break;
    }
  }
  return out;
}

std::vector<std::int64_t> ThinSet::elements_in(std::int64_t lo, std::int64_t hi) const
{
  std::vector<std::int64_t> out;
  switch (kind_) {
  case Kind::PowersOfTwo:
    for (std::int64_t p = 1; p <= hi && p > 0; p *= 2)
      if (p >= lo)
        out.push_back(p);
    break;
  case Kind::Squares:
    for (std::int64_t k = 0; k * k <= hi; ++k)
      if (k * k >= lo)
        out.push_back(k * k);
    break;
  case Kind::ExplicitFinite:
    for (auto v : elements_)
      if (v >= lo && v <= hi)
        out.push_back(v);
    break;
  case Kind::Stream:
    for (std::size_t i = 0;; ++i) {
      std::int64_t v = nth_(i);
      if (v > hi)
        break;
      if (v >= lo)
        out.push_back(v);
    }
    break;
  }
  return out;
}

std::size_t ThinSet::intersection_bound(std::int64_t n) const
{
  switch (kind_) {
  case Kind::PowersOfTwo: return 1; // 2^a - 2^b = n has at most one solution
  case Kind::Squares: return divisor_count(n); // (a - b)(a + b) = n
  case Kind::ExplicitFinite: return elements_.size();
  case Kind::Stream: return bound_(n);
  }
  return 0;
}

bool in_FA(const FreeWord &w, const ThinSet &A) { return letters_in(w, A); }

ThinReport thin_check(const ThinSet &A, std::int64_t range)
{
  ThinReport report{range, {}, 0, false};
  auto members = A.elements_in(-range, range);
  for (std::int64_t n = -range; n <= range; ++n) {
    if (n == 0)
      continue;
    ThinEntry e{n, {}};
    for (auto x : members)
      if (A.contains(x - n))
        e.members.push_back(x);
    report.max_size = std::max(report.max_size, e.members.size());
    if (e.members.size() > A.intersection_bound(n))
      report.violation = true;
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string_view verdict_name(Verdict::Kind kind) noexcept
{
  switch (kind) {
  case Verdict::Kind::InSubgroup: return "InSubgroup";
  case Verdict::Kind::MovesOut: return "MovesOut";
  case Verdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict self_normalizing_certify(const SDElement &h, const ThinSet &A, std::size_t depth)
{
  if (h.shift == 0 && letters_in(h.word, A))
    return {Verdict::Kind::InSubgroup, std::nullopt, std::nullopt};

  // Nonzero shift n: z_a goes to u z_{a+n} u^-1, which keeps the letter a+n,
  // and a+n leaves A for some early a because A n (A - n) is finite.
  // Shift 0 with u outside F_A: write u = p s with s the longest suffix in
  // F_A. Then u z_a u^-1 = p (s z_a s^-1) p^-1, the middle is a nontrivial
  // reduced word over A and p ends in a letter outside A, so nothing cancels
  // across and the least a already works.
  for (auto a : A.first(depth)) {
    SDElement image = sd_conj(h, {FreeWord::generator(a), 0});
    if (outside_FA(image, A))
      return {Verdict::Kind::MovesOut, a, image};
  }
  return {Verdict::Kind::Inconclusive, std::nullopt, std::nullopt};
}

bool verdict_holds(const SDElement &h, const ThinSet &A, const Verdict &v)
{
  switch (v.kind) {
  case Verdict::Kind::InSubgroup: return h.shift == 0 && letters_in(h.word, A);
  case Verdict::Kind::MovesOut: {
    if (!v.witness || !A.contains(*v.witness))
      return false;
    SDElement image = sd_mul(sd_mul(h, {FreeWord::generator(*v.witness), 0}), sd_inv(h));
    return (!v.conjugate || *v.conjugate == image) && outside_FA(image, A);
  }
  case Verdict::Kind::Inconclusive: return false;
  }
  return false;
}

std::optional<std::int64_t> first_difference(const ThinSet &A, const ThinSet &B,
                                             std::int64_t lo, std::int64_t hi)
{
  for (std::int64_t x = lo; x <= hi; ++x)
    if (A.contains(x) != B.contains(x))
      return x;
  return std::nullopt;
}

} // namespace permtop
