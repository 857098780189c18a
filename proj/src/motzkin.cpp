#include "mineuclid/motzkin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace mineuclid {

namespace {

std::int64_t norm_as_int64(GaussInt beta, const char* who) {
  if (is_zero(beta)) throw std::domain_error(std::string(who) + ": zero modulus");
  std::uint64_t n = norm(beta);
  if (n > static_cast<std::uint64_t>(INT64_MAX))
    throw std::overflow_error(std::string(who) + ": modulus norm out of range");
  return static_cast<std::int64_t>(n);
}

std::int64_t isqrt_floor(std::int64_t v) {
  if (v < 0) throw std::domain_error("isqrt: negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

ResidueKey residue_key(GaussInt x, GaussInt beta) {
  std::int64_t n = norm_as_int64(beta, "residue_key");
  GaussInt t = x * conj(beta);
  auto reduce = [n](std::int64_t v) {
    v %= n;
    if (v < 0) v += n;
    return static_cast<std::uint64_t>(v);
  };
  return {reduce(t.re), reduce(t.im)};
}

std::vector<GaussInt> residue_system(GaussInt beta) {
  std::int64_t n = norm_as_int64(beta, "residue_system");

  for (GaussInt assoc : associates(beta)) {
    std::int64_t a = assoc.re, b = assoc.im;
    if (a > b && b >= 0) {
      std::vector<GaussInt> out;
      out.reserve(static_cast<std::size_t>(n));
      for (std::int64_t x = 0; x < a; ++x)
        for (std::int64_t y = 0; y < a; ++y) out.push_back({x, y});
      for (std::int64_t x = 0; x < b; ++x)
        for (std::int64_t y = -b; y < 0; ++y) out.push_back({x, y});
      std::sort(out.begin(), out.end());
      return out;
    }
  }

  // No associate in normal form (purely diagonal or conjugate-oriented
  // moduli): walk box rings outward, keeping the first representative seen
  // of each class. Every class has a representative with coordinates at
  // most sqrt(N/2) <= |re|+|im|, so the scan terminates within that radius.
  std::int64_t radius = detail::checked_add(detail::checked_abs(beta.re),
                                            detail::checked_abs(beta.im));
  std::unordered_set<std::uint64_t> seen;
  std::vector<GaussInt> out;
  auto packed = [&](GaussInt z) {
    ResidueKey k = residue_key(z, beta);
    return k.k1 * static_cast<std::uint64_t>(n) + k.k2;
  };
  for (std::int64_t r = 0; r <= radius && std::cmp_less(out.size(), n); ++r) {
    for (std::int64_t re = -r; re <= r && std::cmp_less(out.size(), n); ++re) {
      bool edge_re = (re == -r || re == r);
      for (std::int64_t im = -r; im <= r; ++im) {
        if (!edge_re && im != -r && im != r) continue;
        if (seen.insert(packed({re, im})).second) {
          out.push_back({re, im});
          if (std::cmp_equal(out.size(), n)) break;
        }
      }
    }
  }
  if (!std::cmp_equal(out.size(), n))
    throw std::logic_error("residue_system: incomplete scan");
  std::sort(out.begin(), out.end());
  return out;
}

MotzkinLevel level_zero() {
  std::vector<GaussInt> e = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::sort(e.begin(), e.end());
  return {0, e};
}

bool covers(const MotzkinLevel& level, GaussInt beta) {
  std::int64_t n = norm_as_int64(beta, "covers");
  if (std::cmp_greater(n, level.elements.size())) return false;

  // Count distinct cosets among the elements via the canonical residue
  // r(x) = x - round_div(x, beta)*beta. round_div commutes with adding
  // multiples of beta, so r labels cosets bijectively and counting distinct
  // r values equals counting distinct residue_key values. N(r) <= N(beta)/2
  // keeps the labels in a small square, indexable without hashing.
  std::int64_t half = isqrt_floor(n / 2) + 1;
  std::int64_t side = 2 * half + 1;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(side * side), 0);
  std::int64_t found = 0;
  for (GaussInt x : level.elements) {
    GaussInt r = x - round_div(x, beta) * beta;
    auto idx = static_cast<std::size_t>((r.re + half) * side + (r.im + half));
    if (!seen[idx]) {
      seen[idx] = 1;
      if (++found == n) return true;
    }
  }
  return false;
}

MotzkinLevel next_level(const MotzkinLevel& level) {
  auto size = static_cast<std::int64_t>(level.elements.size());
  std::int64_t root = isqrt_floor(size);
  if (root * root < size) ++root;  // ceil
  std::int64_t radius = root + 1;

  std::vector<GaussInt> out = level.elements;
  for (std::int64_t re = -radius; re <= radius; ++re) {
    for (std::int64_t im = -radius; im <= radius; ++im) {
      GaussInt beta{re, im};
      if (is_zero(beta)) continue;
      if (std::cmp_greater(norm(beta), size)) continue;
      if (std::binary_search(level.elements.begin(), level.elements.end(), beta)) continue;
      if (covers(level, beta)) out.push_back(beta);
    }
  }
  std::sort(out.begin(), out.end());
  return {level.n + 1, out};
}

std::vector<MotzkinLevel> levels_up_to(int nmax) {
  if (nmax < 0) throw std::domain_error("levels_up_to: negative index");
  std::vector<MotzkinLevel> out{level_zero()};
  for (int n = 1; n <= nmax; ++n) out.push_back(next_level(out.back()));
  return out;
}

std::vector<std::vector<std::int64_t>> int_levels_up_to(int nmax) {
  if (nmax < 0) throw std::domain_error("int_levels_up_to: negative index");
  std::vector<std::int64_t> cur = {-1, 0, 1};
  std::vector<std::vector<std::int64_t>> out{cur};
  for (int n = 1; n <= nmax; ++n) {
    std::vector<std::int64_t> next = cur;
    auto limit = static_cast<std::int64_t>(cur.size());
    for (std::int64_t m = 2; m <= limit; ++m) {
      if (std::binary_search(cur.begin(), cur.end(), m)) {
        // m and -m enter levels together (same residues), so neither is new
        continue;
      }
      std::vector<std::uint8_t> seen(static_cast<std::size_t>(m), 0);
      std::int64_t found = 0;
      for (std::int64_t x : cur) {
        std::int64_t r = ((x % m) + m) % m;
        if (!seen[static_cast<std::size_t>(r)]) {
          seen[static_cast<std::size_t>(r)] = 1;
          if (++found == m) break;
        }
      }
      if (found == m) {
        next.push_back(m);
        next.push_back(-m);
      }
    }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
    out.push_back(cur);
  }
  return out;
}

}  // namespace mineuclid
