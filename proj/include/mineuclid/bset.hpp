#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mineuclid/gaussint.hpp"

namespace mineuclid {

/// Membership in B_n, the Gaussian integers expressible with n+1 digits in
/// base 1+i over {0, +-1, +-i}. Decided by the closed-form bounds: z != 0 is
/// in B_n iff, with j the 2-adic depth of (re, im),
///   j <= n/2,  max(|re|,|im|) <= w(n) - 2^(j+1),  |re|+|im| <= w(n+1) - 3*2^j.
/// 0 belongs to every B_n.
bool b_member(int n, GaussInt z);

/// The minimal Euclidean function on Z[i]: least n with z in B_n (z != 0).
int phi(GaussInt z);

/// The integer baseline: floor(log2 |x|) for x != 0.
int phi_int(std::int64_t x);

/// All of B_n, sorted lexicographically by (re, im).
std::vector<GaussInt> enumerate_b(int n);

/// A base-(1+i) digit: zero or one of the four units.
enum class Digit : std::uint8_t { zero, plus_one, minus_one, plus_i, minus_i };

GaussInt digit_value(Digit d);

/// Digit sequence v_0..v_n, least significant first; value = sum v_j (1+i)^j.
using Expansion = std::vector<Digit>;

GaussInt eval_expansion(const Expansion& e);

/// "[1,1,-i]"; "[]" for the empty expansion.
std::string to_string(const Expansion& e);

/// A shortest expansion of z with at most cap+1 digits, or empty if z has
/// none that short. Found by breadth-first search over remainders: the next
/// digit must be congruent to the remainder mod (1+i), which forces 0 when
/// (1+i) divides it and one of the four units otherwise.
std::optional<Expansion> expand_min(GaussInt z, int cap);

}  // namespace mineuclid
