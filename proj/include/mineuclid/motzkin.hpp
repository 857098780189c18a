#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "mineuclid/gaussint.hpp"

namespace mineuclid {

/// Canonical label of the coset of x mod beta:
/// (Re(x*conj(beta)) mod N(beta), Im(x*conj(beta)) mod N(beta)).
/// key(x) == key(y) iff beta | (x - y).
struct ResidueKey {
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;
  friend constexpr bool operator==(const ResidueKey&, const ResidueKey&) = default;
  friend constexpr auto operator<=>(const ResidueKey&, const ResidueKey&) = default;
};

ResidueKey residue_key(GaussInt x, GaussInt beta);

/// Exactly N(beta) pairwise-inequivalent representatives of Z[i]/(beta),
/// sorted. When some associate a+bi of beta has a > b >= 0, this is the
/// union of the square {x+yi : 0 <= x,y < a} and the strip
/// {x+yi : 0 <= x < b, -b <= y < 0}; otherwise representatives are collected
/// by an outward box-ring scan from the origin.
std::vector<GaussInt> residue_system(GaussInt beta);

/// One level of the hierarchy A_0 = {0, units},
/// A_n = A_{n-1} union { beta : A_{n-1} covers every coset of Z[i]/(beta) }.
struct MotzkinLevel {
  int n = 0;
  std::vector<GaussInt> elements;  // sorted lexicographically
};

MotzkinLevel level_zero();

/// True iff the level's elements hit all N(beta) residue classes mod beta.
bool covers(const MotzkinLevel& level, GaussInt beta);

/// Adds every nonzero beta whose cosets are all covered by the level. Only
/// beta with N(beta) <= |elements| can qualify (a finite set cannot surject
/// onto more classes than it has members), so the candidate scan is the box
/// max(|re|,|im|) <= ceil(sqrt(|elements|)) + 1 filtered by that norm bound.
MotzkinLevel next_level(const MotzkinLevel& level);

std::vector<MotzkinLevel> levels_up_to(int nmax);

/// The integer analogue, built from {0, +-1} by the same coverage rule with
/// residues 0..|m|-1.
std::vector<std::vector<std::int64_t>> int_levels_up_to(int nmax);

}  // namespace mineuclid
