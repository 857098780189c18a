// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] is the CLI binary (needed by the determinism criterion).

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mineuclid/bset.hpp"
#include "mineuclid/euclid.hpp"
#include "mineuclid/motzkin.hpp"
#include "mineuclid/render.hpp"
#include "mineuclid/wseq.hpp"

using namespace mineuclid;

namespace {

std::string g_cli;
RemainderTableCache g_cache;

bool run_criterion(int number, const char* description, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d (%s): %s [%.1fs]%s%s\n", number, description,
              ok ? "PASS" : "FAIL", secs, error.empty() ? "" : " error: ", error.c_str());
  std::fflush(stdout);
  return ok;
}

bool fail(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  return false;
}

// ---- criterion 1: Motzkin levels (coverage construction) equal B_n ----

bool criterion_oracle_equality() {
  auto levels = levels_up_to(8);
  bool ok = true;
  for (const auto& level : levels) {
    auto expected = enumerate_b(level.n);
    if (level.elements != expected)
      ok = fail("  level %d: %zu coverage elements vs %zu enumerated\n", level.n,
                level.elements.size(), expected.size());
    std::fprintf(stderr, "  n=%d: |A|=%zu |B|=%zu\n", level.n, level.elements.size(),
                 expected.size());
  }
  if (levels[0].elements.size() != 5 || levels[1].elements.size() != 17)
    ok = fail("  explicit listings violated: |A_0|=%zu |A_1|=%zu\n",
              levels[0].elements.size(), levels[1].elements.size());
  std::vector<GaussInt> b0 = {{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
  if (levels[0].elements != b0) ok = fail("  A_0 differs from {0, +-1, +-i}\n");
  return ok;
}

// ---- criterion 2: shortest-expansion search agrees with phi ----

bool criterion_expansion_oracle() {
  for (std::int64_t re = -40; re <= 40; ++re)
    for (std::int64_t im = -40; im <= 40; ++im) {
      GaussInt z{re, im};
      if (is_zero(z)) continue;
      auto e = expand_min(z, 20);
      if (!e) return fail("  no expansion for %s\n", to_string(z).c_str());
      if (static_cast<int>(e->size()) - 1 != phi(z))
        return fail("  %s: expansion length %zu vs phi %d\n", to_string(z).c_str(), e->size(),
                    phi(z));
      if (eval_expansion(*e) != z)
        return fail("  %s: expansion does not evaluate back\n", to_string(z).c_str());
    }
  return true;
}

// ---- criterion 3: integer baseline ----

bool criterion_integer_baseline() {
  auto levels = int_levels_up_to(9);
  for (int n = 0; n <= 9; ++n) {
    std::int64_t bound = (std::int64_t{1} << (n + 1)) - 1;
    std::vector<std::int64_t> expected;
    for (std::int64_t x = -bound; x <= bound; ++x) expected.push_back(x);
    if (levels[static_cast<std::size_t>(n)] != expected)
      return fail("  integer level %d differs from {|x| <= %lld}\n", n,
                  static_cast<long long>(bound));
  }
  for (std::int64_t x = -1024; x <= 1024; ++x) {
    if (x == 0) continue;
    std::int64_t m = x < 0 ? -x : x;
    int log = 0;
    while (m >= 2) {
      m /= 2;
      ++log;
    }
    if (phi_int(x) != log) return fail("  phi_int(%lld) != %d\n", static_cast<long long>(x), log);
  }
  return true;
}

// ---- criterion 4: property suites ----

bool w_identities() {
  auto pow2 = [](int e) { return std::int64_t{1} << e; };
  for (int n = 0; n <= 30; ++n) {
    if (2 * (w(n + 1) - w(n)) > w(n)) return fail("  w identity 1 fails at %d\n", n);
    if (w(n) + pow2(n / 2) > w(n + 1)) return fail("  w identity 2 fails at %d\n", n);
    if (n >= 1 && w(n) - pow2(n / 2) != w(n - 1))
      return fail("  w difference identity fails at %d\n", n);
    if (n >= 1 && w(n + 1) - 3 * pow2(n / 2) > w(n - 1))
      return fail("  w identity 4 fails at %d\n", n);
    if (n >= 2 && w(n) != 2 * w(n - 2)) return fail("  w doubling fails at %d\n", n);
  }
  return true;
}

bool closure_shift_degenerate() {
  for (int n = 0; n <= 10; ++n) {
    auto level = enumerate_b(n);
    std::unordered_set<GaussInt, GaussIntHash> members(level.begin(), level.end());
    for (GaussInt z : level) {
      if (!members.count(conj(z))) return fail("  B_%d not conj-closed at %s\n", n,
                                               to_string(z).c_str());
      for (Unit u : Unit::all())
        if (!members.count(z * u)) return fail("  B_%d not unit-closed\n", n);
      if (!b_member(n + 1, z * GaussInt{1, 1})) return fail("  shift fails in B_%d\n", n);
      if (!is_zero(z)) {
        if (onepi_valuation(z) > n)
          return fail("  degenerate divisibility fails in B_%d\n", n);
        if (phi(z * GaussInt{1, 1}) != phi(z) + 1)
          return fail("  phi shift fails at %s\n", to_string(z).c_str());
        int depth = two_adic_depth(z);
        for (int j = 1; j <= depth && 2 * j <= n; ++j)
          if (!b_member(n - 2 * j, {z.re >> j, z.im >> j}))
            return fail("  2^j descent fails in B_%d\n", n);
      }
    }
  }
  return true;
}

bool divisor_closure() {
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t max_norm = 0;
    for (GaussInt z : enumerate_b(n)) max_norm = std::max(max_norm, norm(z));
    auto bound = static_cast<std::int64_t>(std::max<std::uint64_t>(1, max_norm));
    std::int64_t box = 1;
    while (box * box < bound) ++box;
    std::vector<GaussInt> factors;
    for (std::int64_t re = -box; re <= box; ++re)
      for (std::int64_t im = -box; im <= box; ++im) {
        GaussInt z{re, im};
        if (!is_zero(z) && norm(z) <= static_cast<std::uint64_t>(bound)) factors.push_back(z);
      }
    for (GaussInt x : factors)
      for (GaussInt y : factors) {
        GaussInt prod = x * y;
        if (b_member(n, prod) && !b_member(n, x))
          return fail("  %s * %s in B_%d but %s is not\n", to_string(x).c_str(),
                      to_string(y).c_str(), n, to_string(x).c_str());
      }
  }
  return true;
}

bool octagon_sandwich() {
  for (int n = 0; n <= 10; ++n) {
    for (GaussInt z : enumerate_b(n))
      if (!oct_contains(n, z)) return fail("  B_%d escapes its octagon\n", n);

    auto exceptional = associates(onepi_pow(n + 2));
    std::int64_t bound = oct_spec(n).box_bound;
    for (std::int64_t re = -bound; re <= bound; ++re)
      for (std::int64_t im = -bound; im <= bound; ++im) {
        GaussInt z{re, im};
        if (!oct_contains(n, z)) continue;
        bool in_next = b_member(n + 1, z);
        bool is_exceptional =
            std::find(exceptional.begin(), exceptional.end(), z) != exceptional.end();
        if (!in_next && !is_exceptional)
          return fail("  Oct_%d point %s outside B_%d and the exceptional set\n", n,
                      to_string(z).c_str(), n + 1);
        if (!is_zero(z) && two_adic_depth(z) == 0 && !b_member(n, z))
          return fail("  odd-depth Oct_%d point %s not in B_%d\n", n, to_string(z).c_str(), n);
      }
  }
  return true;
}

bool criterion_property_suites() {
  return w_identities() && closure_shift_degenerate() && divisor_closure() &&
         octagon_sandwich();
}

// ---- criterion 5: Euclidean property of phi ----

bool criterion_euclidean_property() {
  for (std::int64_t re = -14; re <= 14; ++re)
    for (std::int64_t im = -14; im <= 14; ++im) {
      GaussInt b{re, im};
      if (is_zero(b)) continue;
      std::uint64_t nb = norm(b);
      if (nb < 2 || nb > 200) continue;
      CoverageReport rep = euclidean_property_check(b);
      if (!rep.ok || !rep.witnesses.empty())
        return fail("  uncovered classes mod %s (%zu witnesses)\n", to_string(b).c_str(),
                    rep.witnesses.size());
    }

  for (std::int64_t re = -30; re <= 30; ++re)
    for (std::int64_t im = -30; im <= 30; ++im) {
      GaussInt b{re, im};
      if (is_zero(b)) continue;
      int pb = phi(b);
      for (std::int64_t ar = -30; ar <= 30; ++ar)
        for (std::int64_t ai = -30; ai <= 30; ++ai) {
          GaussInt a{ar, ai};
          DivResult mind = div_min(a, b, &g_cache);  // throws on the internal-error path
          if (a != mind.q * b + mind.r) return fail("  div_min identity fails\n");
          if (!is_zero(mind.r) && phi(mind.r) >= pb)
            return fail("  div_min remainder not below phi(b)\n");
          DivResult normd = div_norm(a, b);
          if (a != normd.q * b + normd.r) return fail("  div_norm identity fails\n");
          if (2 * norm(normd.r) > norm(b)) return fail("  div_norm remainder too large\n");
        }
    }
  return true;
}

// ---- criterion 6: GCD cross-validation ----

bool criterion_gcd_cross_validation() {
  for (std::int64_t re = -30; re <= 30; ++re)
    for (std::int64_t im = -30; im <= 30; ++im) {
      GaussInt b{re, im};
      for (std::int64_t ar = -30; ar <= 30; ++ar)
        for (std::int64_t ai = -30; ai <= 30; ++ai) {
          GaussInt a{ar, ai};
          if (is_zero(a) && is_zero(b)) continue;
          ChainReport mp = gcd_chain(a, b, Strategy::min_phi, &g_cache);
          ChainReport nm = gcd_chain(a, b, Strategy::norm);
          auto assoc = associates(nm.gcd);
          if (!std::binary_search(assoc.begin(), assoc.end(), mp.gcd))
            return fail("  strategies disagree at a=%s b=%s\n", to_string(a).c_str(),
                        to_string(b).c_str());
          if (!is_zero(b) && mp.steps.size() > static_cast<std::size_t>(phi(b)) + 1)
            return fail("  min-phi chain too long at a=%s b=%s\n", to_string(a).c_str(),
                        to_string(b).c_str());
          for (GaussInt input : {a, b})
            if (!is_zero(input) && !try_div(input, mp.gcd))
              return fail("  gcd does not divide %s\n", to_string(input).c_str());
        }
    }
  return true;
}

// ---- criterion 7: CLI determinism goldens ----

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::FILE* pipe = popen(("'" + g_cli + "' " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool criterion_determinism() {
  if (g_cli.empty()) return fail("  CLI path not provided\n");

  const std::string golden_json =
      "[[-2,-1],[-2,1],[-1,-2],[-1,-1],[-1,0],[-1,1],[-1,2],[0,-1],[0,0],[0,1],"
      "[1,-2],[1,-1],[1,0],[1,1],[1,2],[2,-1],[2,1]]\n";
  RunResult first = run_cli("export 1 json -");
  RunResult second = run_cli("export 1 json -");
  if (first.exit_code != 0 || second.exit_code != 0) return fail("  export exited nonzero\n");
  if (first.out != second.out) return fail("  export bytes differ between runs\n");
  if (first.out != golden_json) return fail("  export bytes differ from golden\n");
  if (first.out != render_json(enumerate_b(1)))
    return fail("  CLI bytes differ from library render\n");

  RunResult verify = run_cli("verify 2");
  if (verify.exit_code != 0) return fail("  verify exited %d\n", verify.exit_code);
  if (verify.out != "n=0: 5=5 PASS; n=1: 17=17 PASS; n=2: 49=49 PASS\n")
    return fail("  verify output was: %s", verify.out.c_str());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  bool ok = true;
  ok &= run_criterion(1, "coverage-built levels equal B_n for n=0..8",
                      criterion_oracle_equality);
  ok &= run_criterion(2, "phi equals shortest-expansion search, |coords| <= 40",
                      criterion_expansion_oracle);
  ok &= run_criterion(3, "integer hierarchy and floor-log2 baseline",
                      criterion_integer_baseline);
  ok &= run_criterion(4, "w identities, closure/shift, divisor closure, octagon sandwich",
                      criterion_property_suites);
  ok &= run_criterion(5, "division by phi succeeds for all N(b) <= 200 and |coords| <= 30",
                      criterion_euclidean_property);
  ok &= run_criterion(6, "min-phi and norm GCD agree up to units, |coords| <= 30",
                      criterion_gcd_cross_validation);
  ok &= run_criterion(7, "CLI export/verify byte determinism", criterion_determinism);
  std::printf("acceptance: %s\n", ok ? "ALL PASS" : "FAILURES");
  return ok ? 0 : 1;
}
