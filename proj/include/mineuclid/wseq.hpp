#pragma once

#include <cstdint>

#include "mineuclid/gaussint.hpp"

namespace mineuclid {

/// w(2n) = 2^(n+1) + 2^n, w(2n+1) = 2^(n+2). Computed from the closed form.
/// Throws std::overflow_error once the value leaves the signed 64-bit range.
std::int64_t w(int k);

/// Bounds of the n-th octagonal region: max(|x|,|y|) <= box_bound and
/// |x|+|y| <= diag_bound.
struct OctSpec {
  int n = 0;
  std::int64_t box_bound = 0;   // w(n) - 2
  std::int64_t diag_bound = 0;  // w(n+1) - 3
};

OctSpec oct_spec(int n);

bool oct_contains(int n, GaussInt z);

}  // namespace mineuclid
