#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mineuclid {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gaussint: add overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("gaussint: sub overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("gaussint: mul overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

// floor division for y > 0
inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if (x % y != 0 && x < 0) --q;
  return q;
}

// nearest integer to p/n (n > 0), ties rounded toward -inf
inline std::int64_t round_half_down(std::int64_t p, std::int64_t n) {
  return floor_div(checked_add(checked_mul(2, p), n - 1), 2 * n);
}

}  // namespace detail

/// An exact Gaussian integer re + im*i. All arithmetic on GaussInt either
/// returns the exact result or throws std::overflow_error; coordinates up to
/// +-2^31 are always safe for the ring operations.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

  friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;
  // lexicographic (re, then im); this is the canonical enumeration order
  friend constexpr auto operator<=>(const GaussInt&, const GaussInt&) = default;
};

inline GaussInt operator+(GaussInt a, GaussInt b) {
  return {detail::checked_add(a.re, b.re), detail::checked_add(a.im, b.im)};
}

inline GaussInt operator-(GaussInt a, GaussInt b) {
  return {detail::checked_sub(a.re, b.re), detail::checked_sub(a.im, b.im)};
}

inline GaussInt operator-(GaussInt a) {
  return {detail::checked_neg(a.re), detail::checked_neg(a.im)};
}

inline GaussInt operator*(GaussInt a, GaussInt b) {
  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;
  return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

inline GaussInt conj(GaussInt a) { return {a.re, detail::checked_neg(a.im)}; }

inline bool is_zero(GaussInt a) { return a.re == 0 && a.im == 0; }

/// N(a+bi) = a^2 + b^2, exact.
inline std::uint64_t norm(GaussInt a) {
  auto sq = [](std::int64_t v) {
    std::uint64_t m = v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
    std::uint64_t r;
    if (__builtin_mul_overflow(m, m, &r)) throw std::overflow_error("gaussint: norm overflow");
    return r;
  };
  std::uint64_t r;
  if (__builtin_add_overflow(sq(a.re), sq(a.im), &r))
    throw std::overflow_error("gaussint: norm overflow");
  return r;
}

inline bool is_unit(GaussInt a) { return norm(a) == 1; }

/// One of the four units {1, -1, i, -i}, stored as the power of i.
class Unit {
 public:
  constexpr Unit() = default;

  static constexpr Unit one() { return Unit(0); }
  static constexpr Unit i() { return Unit(1); }
  static constexpr Unit minus_one() { return Unit(2); }
  static constexpr Unit minus_i() { return Unit(3); }
  static constexpr std::array<Unit, 4> all() {
    return {one(), i(), minus_one(), minus_i()};
  }

  constexpr GaussInt value() const {
    switch (pow_) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  static std::optional<Unit> from_gauss(GaussInt z) {
    for (Unit u : all())
      if (u.value() == z) return u;
    return std::nullopt;
  }

  friend constexpr Unit operator*(Unit a, Unit b) { return Unit((a.pow_ + b.pow_) & 3); }
  friend constexpr Unit conj(Unit u) { return Unit((4 - u.pow_) & 3); }
  friend constexpr bool operator==(Unit, Unit) = default;

 private:
  explicit constexpr Unit(int p) : pow_(static_cast<std::uint8_t>(p)) {}
  std::uint8_t pow_ = 0;
};

inline GaussInt operator*(GaussInt a, Unit u) { return a * u.value(); }

/// The set {a, -a, ia, -ia}, sorted; {0} when a = 0.
std::vector<GaussInt> associates(GaussInt a);

/// Exact quotient a/b when b | a, empty otherwise. Throws on b = 0.
std::optional<GaussInt> try_div(GaussInt a, GaussInt b);

/// Largest j with 2^j dividing both coordinates (a != 0).
int two_adic_depth(GaussInt a);

/// Largest k with (1+i)^k | a (a != 0); equals the 2-adic valuation of N(a).
int onepi_valuation(GaussInt a);

/// Nearest-lattice-point quotient of a/b, each component rounded to the
/// closest integer with ties toward -inf. The remainder a - q*b has
/// N(r) <= N(b)/2. Throws on b = 0.
GaussInt round_div(GaussInt a, GaussInt b);

/// The unique associate with re > 0, im >= 0 (0 for 0).
GaussInt canonical_associate(GaussInt a);

/// (1+i)^k, exact.
GaussInt onepi_pow(int k);

/// "2+1i", "1-1i", "0+0i": full two-component form, round-trips through parse.
std::string to_string(GaussInt a);

/// Strict literal parser: [-]D, [-]D(+|-)Di, pure-imaginary [-]Di, and a bare
/// i meaning 1i ("i", "-i", "4+i", "4-i"). No whitespace, no leading '+',
/// no trailing junk. Returns empty on any violation or out-of-range digits.
std::optional<GaussInt> parse_gauss(std::string_view text);

struct GaussIntHash {
  std::size_t operator()(const GaussInt& z) const {
    std::uint64_t h = static_cast<std::uint64_t>(z.re) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(z.im) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace mineuclid
