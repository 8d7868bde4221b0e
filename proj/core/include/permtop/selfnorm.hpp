#ifndef PERMTOP_SELFNORM_HPP
#define PERMTOP_SELFNORM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace permtop {

/// z_generator ^ exponent
struct Syllable {
  std::int64_t generator;
  std::int64_t exponent;
  friend bool operator==(const Syllable &, const Syllable &) = default;
  friend auto operator<=>(const Syllable &, const Syllable &) = default;
};

/// Freely reduced word in the free group on generators z_k, k an integer.
/// Adjacent syllables always have distinct generators; the empty word is
/// the identity.
class FreeWord {
public:
  FreeWord() = default;

  /// Free reduction of arbitrary syllables. Throws ZeroExponent.
  static FreeWord reduce(const std::vector<Syllable> &raw);
  static FreeWord generator(std::int64_t k, std::int64_t exponent = 1);

  const std::vector<Syllable> &syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  /// Number of letters, i.e. the sum of |exponent|.
  std::int64_t length() const noexcept;

  friend bool operator==(const FreeWord &, const FreeWord &) = default;
  friend auto operator<=>(const FreeWord &, const FreeWord &) = default;

private:
  std::vector<Syllable> syllables_;
};

FreeWord multiply(const FreeWord &v, const FreeWord &w);
FreeWord invert(const FreeWord &v);
/// The shift automorphism applied n times: z_k -> z_{k+n}.
FreeWord shift(const FreeWord &v, std::int64_t n);
std::set<std::int64_t> letters(const FreeWord &v);

/// Element (word, shift) of the semidirect product of the free group with
/// Z acting by the shift automorphism.
struct SDElement {
  FreeWord word;
  std::int64_t shift = 0;
  friend bool operator==(const SDElement &, const SDElement &) = default;
  friend auto operator<=>(const SDElement &, const SDElement &) = default;
};

/// (v, n)(u, m) = (v * shift(u, n), n + m)
SDElement sd_mul(const SDElement &a, const SDElement &b);
/// (u, n)^-1 = (shift(u^-1, -n), -n)
SDElement sd_inv(const SDElement &h);
/// h w h^-1
SDElement sd_conj(const SDElement &h, const SDElement &w);

/// The two generators (1, 1) and (z_0, 0), written with integer powers.
struct GeneratorPower {
  enum class Which { Shift, Z0 } which;
  std::int64_t exponent;
};

/// Expresses h as a product of powers of (1, 1) and (z_0, 0) using
/// (v, n) = (v, 0)(1, n) and (z_k, 0) = (1, k)(z_0, 0)(1, -k).
std::vector<GeneratorPower> express_in_generators(const SDElement &h);
SDElement evaluate_generators(const std::vector<GeneratorPower> &word);

/// Subset of Z that is thin: A n (A + n) is finite for every n != 0.
class ThinSet {
public:
  enum class Kind { PowersOfTwo, Squares, ExplicitFinite, Stream };

  static ThinSet powers_of_two();
  static ThinSet squares();
  static ThinSet finite(std::vector<std::int64_t> elements);
  /// Strictly increasing enumerator nth(0) < nth(1) < ... together with a
  /// declared bound on |A n (A + n)|.
  static ThinSet stream(std::string name, std::function<std::int64_t(std::size_t)> nth,
                        std::function<std::size_t(std::int64_t)> intersection_bound);

  Kind kind() const noexcept { return kind_; }
  /// Literal name: pow2, squares, finite{...} or the stream name.
  std::string name() const;
  const std::vector<std::int64_t> &explicit_elements() const noexcept { return elements_; }

  bool contains(std::int64_t x) const;
  /// The first `count` elements in increasing order (fewer for finite sets).
  std::vector<std::int64_t> first(std::size_t count) const;
  /// Elements in [lo, hi].
  std::vector<std::int64_t> elements_in(std::int64_t lo, std::int64_t hi) const;
  /// Declared upper bound on |A n (A + n)| for n != 0.
  std::size_t intersection_bound(std::int64_t n) const;

private:
  Kind kind_ = Kind::ExplicitFinite;
  std::string name_;
  std::vector<std::int64_t> elements_;
  std::function<std::int64_t(std::size_t)> nth_;
  std::function<std::size_t(std::int64_t)> bound_;
};

/// Membership in the free factor F_A generated by {z_a : a in A}.
bool in_FA(const FreeWord &w, const ThinSet &A);

struct ThinEntry {
  std::int64_t n;
  std::vector<std::int64_t> members; ///< A n (A + n) restricted to [-R, R]
};

struct ThinReport {
  std::int64_t range;
  std::vector<ThinEntry> entries;
  std::size_t max_size = 0;
  bool violation = false;
};

ThinReport thin_check(const ThinSet &A, std::int64_t range);

struct Verdict {
  enum class Kind { InSubgroup, MovesOut, Inconclusive } kind;
  /// a in A with h z_a h^-1 outside F_A (MovesOut only).
  std::optional<std::int64_t> witness;
  std::optional<SDElement> conjugate;
};

std::string_view verdict_name(Verdict::Kind kind) noexcept;

/// Decides whether h normalizes F_A, certifying the negative answer by a
/// generator z_a that h conjugates out of F_A. Candidates a are the first
/// `depth` elements of A.
Verdict self_normalizing_certify(const SDElement &h, const ThinSet &A, std::size_t depth);

/// Independent recheck of a verdict against h and A.
bool verdict_holds(const SDElement &h, const ThinSet &A, const Verdict &v);

/// Least x in [lo, hi] lying in exactly one of A and B.
std::optional<std::int64_t> first_difference(const ThinSet &A, const ThinSet &B,
                                             std::int64_t lo, std::int64_t hi);

} // namespace permtop

#endif // PERMTOP_SELFNORM_HPP
