#include "mineuclid/gaussint.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>

namespace mineuclid {

std::vector<GaussInt> associates(GaussInt a) {
  if (is_zero(a)) return {GaussInt{}};
  std::vector<GaussInt> out;
  out.reserve(4);
  for (Unit u : Unit::all()) out.push_back(a * u);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<GaussInt> try_div(GaussInt a, GaussInt b) {
  if (is_zero(b)) throw std::domain_error("try_div: division by zero");
  std::uint64_t nb = norm(b);
  if (nb > static_cast<std::uint64_t>(INT64_MAX))
    throw std::overflow_error("try_div: modulus norm out of range");
  auto n = static_cast<std::int64_t>(nb);
  GaussInt num = a * conj(b);  // a/b = num / N(b)
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return GaussInt{num.re / n, num.im / n};
}

int two_adic_depth(GaussInt a) {
  if (is_zero(a)) throw std::domain_error("two_adic_depth: undefined for 0");
  // trailing zeros of the two's-complement pattern equal v2; 64 for coord 0
  int jr = std::countr_zero(static_cast<std::uint64_t>(a.re));
  int ji = std::countr_zero(static_cast<std::uint64_t>(a.im));
  return std::min(jr, ji);
}

int onepi_valuation(GaussInt a) {
  if (is_zero(a)) throw std::domain_error("onepi_valuation: undefined for 0");
  int k = 0;
  // (1+i) | a+bi iff a+b is even; a/(1+i) = ((a+b) + (b-a)i)/2
  while (((a.re ^ a.im) & 1) == 0) {
    std::int64_t r = detail::checked_add(a.re, a.im) / 2;
    std::int64_t i = detail::checked_sub(a.im, a.re) / 2;
    a = {r, i};
    ++k;
  }
  return k;
}

GaussInt round_div(GaussInt a, GaussInt b) {
  if (is_zero(b)) throw std::domain_error("round_div: division by zero");
  std::uint64_t nb = norm(b);
  if (nb > static_cast<std::uint64_t>(INT64_MAX))
    throw std::overflow_error("round_div: modulus norm out of range");
  auto n = static_cast<std::int64_t>(nb);
  GaussInt num = a * conj(b);
  return {detail::round_half_down(num.re, n), detail::round_half_down(num.im, n)};
}

GaussInt canonical_associate(GaussInt a) {
  if (is_zero(a)) return a;
  for (int k = 0; k < 4; ++k) {
    if (a.re > 0 && a.im >= 0) return a;
    a = {detail::checked_neg(a.im), a.re};  // multiply by i
  }
  throw std::logic_error("canonical_associate: no quadrant representative");
}

GaussInt onepi_pow(int k) {
  if (k < 0) throw std::domain_error("onepi_pow: negative exponent");
  GaussInt p{1, 0};
  for (int j = 0; j < k; ++j) p = p * GaussInt{1, 1};
  return p;
}

std::string to_string(GaussInt a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld%+lldi", static_cast<long long>(a.re),
                static_cast<long long>(a.im));
  return buf;
}

namespace {

// parses [0-9]+ into v; advances pos; false on empty digits or overflow
bool parse_digits(std::string_view s, std::size_t& pos, std::int64_t& v) {
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) return false;
  auto res = std::from_chars(s.data() + start, s.data() + pos, v);
  return res.ec == std::errc{} && res.ptr == s.data() + pos;
}

}  // namespace

std::optional<GaussInt> parse_gauss(std::string_view s) {
  std::size_t pos = 0;
  auto fail = std::nullopt;
  if (s.empty()) return fail;

  bool neg = s[0] == '-';
  if (neg) ++pos;
  if (pos >= s.size()) return fail;

  // bare imaginary unit: i / -i
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) return fail;
    return GaussInt{0, neg ? -1 : 1};
  }

  std::int64_t first = 0;
  if (!parse_digits(s, pos, first)) return fail;
  if (neg) first = -first;

  if (pos == s.size()) return GaussInt{first, 0};

  if (s[pos] == 'i') {  // pure imaginary with digits: [-]Di
    if (pos + 1 != s.size()) return fail;
    return GaussInt{0, first};
  }

  if (s[pos] != '+' && s[pos] != '-') return fail;
  bool im_neg = s[pos] == '-';
  ++pos;
  if (pos >= s.size()) return fail;

  std::int64_t second = 1;  // "4+i" means 4+1i
  if (s[pos] != 'i' && !parse_digits(s, pos, second)) return fail;
  if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size()) return fail;
  return GaussInt{first, im_neg ? -second : second};
}

}  // namespace mineuclid
