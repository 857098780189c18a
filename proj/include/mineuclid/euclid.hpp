#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mineuclid/gaussint.hpp"
#include "mineuclid/motzkin.hpp"

namespace mineuclid {

/// Raised when a computation that the B_n theory guarantees to succeed does
/// not; a throw here means a falsified invariant, never a recoverable input
/// error.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DivResult {
  GaussInt q;
  GaussInt r;
};

enum class Strategy { min_phi, norm };

std::string_view strategy_label(Strategy s);  // "min-phi" / "norm"

struct ChainReport {
  std::vector<DivResult> steps;
  GaussInt gcd;
  Strategy strategy = Strategy::min_phi;
};

/// Remainder lookup for a fixed modulus: maps each residue class of
/// Z[i]/(b) to its preferred representative drawn from B_{phi(b)-1} plus 0,
/// preferring least phi, then least norm, then lexicographic order. The
/// table depends only on the ideal (b), so it is keyed by the canonical
/// associate and shared across associates.
class RemainderTable {
 public:
  explicit RemainderTable(GaussInt modulus);

  GaussInt canonical_modulus() const { return canon_; }
  int modulus_phi() const { return phi_; }
  std::int64_t class_count() const { return classes_; }

  /// The representative of a's class, or empty if the class is uncovered.
  std::optional<GaussInt> representative(GaussInt a) const;

  bool complete() const { return std::cmp_equal(reps_.size(), classes_); }

  /// Keys (w.r.t. the canonical modulus) of classes with no representative.
  std::vector<ResidueKey> missing_keys() const;

 private:
  struct Entry {
    int phi_rank;  // -1 for the representative 0
    std::uint64_t norm_rank;
    GaussInt rep;
  };
  std::uint64_t packed_key(GaussInt a) const;

  GaussInt canon_;
  int phi_ = 0;
  std::int64_t classes_ = 0;
  std::unordered_map<std::uint64_t, Entry> reps_;
};

/// Shares RemainderTable instances across calls; one entry per ideal.
class RemainderTableCache {
 public:
  const RemainderTable& get(GaussInt modulus);

 private:
  std::unordered_map<GaussInt, std::unique_ptr<RemainderTable>, GaussIntHash> tables_;
};

/// Division with remainder drawn from B_{phi(b)-1} plus 0: a = q*b + r with
/// r = 0 or phi(r) < phi(b). Throws invariant_violation if a's class has no
/// such representative (impossible if the B_n theory holds).
DivResult div_min(GaussInt a, GaussInt b, RemainderTableCache* cache = nullptr);

/// Classical norm division: q = round_div(a, b), r = a - q*b, N(r) <= N(b)/2.
DivResult div_norm(GaussInt a, GaussInt b);

/// Euclidean algorithm under the chosen division; gcd is the last nonzero
/// remainder (b for an exact first division). (a, b) != (0, 0).
ChainReport gcd_chain(GaussInt a, GaussInt b, Strategy strategy,
                      RemainderTableCache* cache = nullptr);

struct CoverageReport {
  bool ok = false;
  std::vector<ResidueKey> witnesses;  // uncovered classes; must be empty
};

/// Checks that every coset of Z[i]/(b) has a representative in
/// B_{phi(b)-1} plus 0, i.e. that phi admits division by b. b nonzero,
/// not a unit.
CoverageReport euclidean_property_check(GaussInt b);

}  // namespace mineuclid
