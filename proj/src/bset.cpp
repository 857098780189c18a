#include "mineuclid/bset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "mineuclid/wseq.hpp"

namespace mineuclid {

namespace {

std::int64_t pow2(int e) {
  if (e < 0 || e > 62) throw std::overflow_error("pow2: exponent out of range");
  return std::int64_t{1} << e;
}

}  // namespace

bool b_member(int n, GaussInt z) {
  if (n < 0) throw std::domain_error("b_member: negative index");
  if (is_zero(z)) return true;
  int j = two_adic_depth(z);
  if (j > n / 2) return false;
  std::int64_t box = w(n) - pow2(j + 1);
  std::int64_t diag = w(n + 1) - 3 * pow2(j);
  std::int64_t ar = detail::checked_abs(z.re);
  std::int64_t ai = detail::checked_abs(z.im);
  return std::max(ar, ai) <= box && detail::checked_add(ar, ai) <= diag;
}

int phi(GaussInt z) {
  if (is_zero(z)) throw std::domain_error("phi: undefined for 0");
  // membership is monotone in n and needs n >= 2j
  for (int n = 2 * two_adic_depth(z);; ++n)
    if (b_member(n, z)) return n;
}

int phi_int(std::int64_t x) {
  if (x == 0) throw std::domain_error("phi_int: undefined for 0");
  std::uint64_t mag = x < 0 ? std::uint64_t(0) - std::uint64_t(x) : std::uint64_t(x);
  return static_cast<int>(std::bit_width(mag)) - 1;
}

std::vector<GaussInt> enumerate_b(int n) {
  if (n < 0) throw std::domain_error("enumerate_b: negative index");
  // per-depth bounds of the union, hoisted out of the scan
  int jmax = n / 2;
  std::vector<std::int64_t> box(jmax + 1), diag(jmax + 1);
  for (int j = 0; j <= jmax; ++j) {
    box[j] = w(n) - pow2(j + 1);
    diag[j] = w(n + 1) - 3 * pow2(j);
  }
  std::int64_t bound = w(n) - 2;
  std::vector<GaussInt> out;
  for (std::int64_t re = -bound; re <= bound; ++re) {
    for (std::int64_t im = -bound; im <= bound; ++im) {
      if (re == 0 && im == 0) {
        out.push_back({0, 0});
        continue;
      }
      int jr = std::countr_zero(static_cast<std::uint64_t>(re));
      int ji = std::countr_zero(static_cast<std::uint64_t>(im));
      int j = std::min(jr, ji);
      if (j > jmax) continue;
      std::int64_t ar = re < 0 ? -re : re;
      std::int64_t ai = im < 0 ? -im : im;
      if (std::max(ar, ai) <= box[j] && ar + ai <= diag[j]) out.push_back({re, im});
    }
  }
  return out;  // scan order is already lexicographic
}

GaussInt digit_value(Digit d) {
  switch (d) {
    case Digit::zero: return {0, 0};
    case Digit::plus_one: return {1, 0};
    case Digit::minus_one: return {-1, 0};
    case Digit::plus_i: return {0, 1};
    default: return {0, -1};
  }
}

GaussInt eval_expansion(const Expansion& e) {
  GaussInt acc{0, 0};
  GaussInt power{1, 0};
  for (Digit d : e) {
    acc = acc + digit_value(d) * power;
    power = power * GaussInt{1, 1};
  }
  return acc;
}

std::string to_string(const Expansion& e) {
  std::string out = "[";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) out += ',';
    switch (e[k]) {
      case Digit::zero: out += '0'; break;
      case Digit::plus_one: out += '1'; break;
      case Digit::minus_one: out += "-1"; break;
      case Digit::plus_i: out += 'i'; break;
      default: out += "-i"; break;
    }
  }
  out += ']';
  return out;
}

namespace {

bool onepi_divides(GaussInt z) { return ((z.re ^ z.im) & 1) == 0; }

GaussInt div_onepi(GaussInt z) {
  return {detail::checked_add(z.re, z.im) / 2, detail::checked_sub(z.im, z.re) / 2};
}

}  // namespace

std::optional<Expansion> expand_min(GaussInt z, int cap) {
  if (cap < 0) throw std::domain_error("expand_min: negative cap");
  if (is_zero(z)) return Expansion{};

  struct Edge {
    GaussInt parent;
    Digit digit;
  };
  std::unordered_map<GaussInt, Edge, GaussIntHash> from;
  std::deque<std::pair<GaussInt, int>> queue;  // (remainder, digits consumed)
  from.emplace(z, Edge{z, Digit::zero});
  queue.emplace_back(z, 0);

  constexpr Digit kUnits[] = {Digit::plus_one, Digit::minus_one, Digit::plus_i,
                              Digit::minus_i};
  int max_digits = cap + 1;

  while (!queue.empty()) {
    GaussInt state = queue.front().first;
    int depth = queue.front().second;
    queue.pop_front();
    if (depth == max_digits) continue;
    bool forced_zero = onepi_divides(state);
    auto step = [&](Digit d) -> std::optional<Expansion> {
      GaussInt next = div_onepi(state - digit_value(d));
      if (is_zero(next)) {
        // reconstruct v_0..v_depth by walking back to the root
        Expansion digits(static_cast<std::size_t>(depth) + 1);
        digits[static_cast<std::size_t>(depth)] = d;
        GaussInt cur = state;
        for (int k = depth - 1; k >= 0; --k) {
          const Edge& e = from.at(cur);
          digits[static_cast<std::size_t>(k)] = e.digit;
          cur = e.parent;
        }
        return digits;
      }
      if (from.emplace(next, Edge{state, d}).second) queue.emplace_back(next, depth + 1);
      return std::nullopt;
    };
    if (forced_zero) {
      if (auto done = step(Digit::zero)) return done;
    } else {
      for (Digit d : kUnits)
        if (auto done = step(d)) return done;
    }
  }
  return std::nullopt;
}

}  // namespace mineuclid
