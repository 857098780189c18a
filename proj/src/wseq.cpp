#include "mineuclid/wseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace mineuclid {

std::int64_t w(int k) {
  if (k < 0) throw std::domain_error("w: negative index");
  int half = k / 2;
  if (k % 2 == 0) {
    if (half > 61) throw std::overflow_error("w: index too large");
    return std::int64_t{3} << half;
  }
  if (half > 60) throw std::overflow_error("w: index too large");
  return std::int64_t{1} << (half + 2);
}

OctSpec oct_spec(int n) { return {n, w(n) - 2, w(n + 1) - 3}; }

bool oct_contains(int n, GaussInt z) {
  OctSpec s = oct_spec(n);
  std::int64_t ar = detail::checked_abs(z.re);
  std::int64_t ai = detail::checked_abs(z.im);
  return std::max(ar, ai) <= s.box_bound && detail::checked_add(ar, ai) <= s.diag_bound;
}

}  // namespace mineuclid
