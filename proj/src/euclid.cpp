#include "mineuclid/euclid.hpp"

#include <algorithm>
#include <utility>

#include "mineuclid/bset.hpp"

namespace mineuclid {

std::string_view strategy_label(Strategy s) {
  return s == Strategy::min_phi ? "min-phi" : "norm";
}

RemainderTable::RemainderTable(GaussInt modulus) {
  if (is_zero(modulus)) throw std::domain_error("RemainderTable: zero modulus");
  canon_ = canonical_associate(modulus);
  phi_ = phi(canon_);
  std::uint64_t n = norm(canon_);
  if (n > UINT32_MAX) throw std::overflow_error("RemainderTable: modulus norm too large");
  classes_ = static_cast<std::int64_t>(n);

  std::vector<GaussInt> pool =
      phi_ > 0 ? enumerate_b(phi_ - 1) : std::vector<GaussInt>{GaussInt{}};
  reps_.reserve(static_cast<std::size_t>(classes_));
  for (GaussInt z : pool) {
    Entry cand{is_zero(z) ? -1 : phi(z), norm(z), z};
    auto [it, inserted] = reps_.emplace(packed_key(z), cand);
    if (inserted) continue;
    Entry& cur = it->second;
    auto rank = [](const Entry& e) { return std::tuple(e.phi_rank, e.norm_rank, e.rep); };
    if (rank(cand) < rank(cur)) cur = cand;
  }
}

std::uint64_t RemainderTable::packed_key(GaussInt a) const {
  ResidueKey k = residue_key(a, canon_);
  return k.k1 * static_cast<std::uint64_t>(classes_) + k.k2;
}

std::optional<GaussInt> RemainderTable::representative(GaussInt a) const {
  auto it = reps_.find(packed_key(a));
  if (it == reps_.end()) return std::nullopt;
  return it->second.rep;
}

std::vector<ResidueKey> RemainderTable::missing_keys() const {
  std::vector<ResidueKey> out;
  if (complete()) return out;
  for (GaussInt rep : residue_system(canon_)) {
    ResidueKey k = residue_key(rep, canon_);
    if (!reps_.count(k.k1 * static_cast<std::uint64_t>(classes_) + k.k2)) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const RemainderTable& RemainderTableCache::get(GaussInt modulus) {
  GaussInt canon = canonical_associate(modulus);
  auto it = tables_.find(canon);
  if (it == tables_.end())
    it = tables_.emplace(canon, std::make_unique<RemainderTable>(canon)).first;
  return *it->second;
}

DivResult div_min(GaussInt a, GaussInt b, RemainderTableCache* cache) {
  if (is_zero(b)) throw std::domain_error("div_min: division by zero");
  std::optional<RemainderTable> local;
  const RemainderTable* table;
  if (cache) {
    table = &cache->get(b);
  } else {
    local.emplace(b);
    table = &*local;
  }
  std::optional<GaussInt> r = table->representative(a);
  if (!r)
    throw invariant_violation("div_min: class of " + to_string(a) + " mod " + to_string(b) +
                            " has no representative below phi(b)");
  std::optional<GaussInt> q = try_div(a - *r, b);
  if (!q) throw invariant_violation("div_min: representative not congruent");
  return {*q, *r};
}

DivResult div_norm(GaussInt a, GaussInt b) {
  if (is_zero(b)) throw std::domain_error("div_norm: division by zero");
  GaussInt q = round_div(a, b);
  return {q, a - q * b};
}

ChainReport gcd_chain(GaussInt a, GaussInt b, Strategy strategy, RemainderTableCache* cache) {
  if (is_zero(a) && is_zero(b)) throw std::domain_error("gcd_chain: gcd(0, 0) undefined");
  if (is_zero(b)) std::swap(a, b);  // divide by the nonzero argument

  ChainReport report;
  report.strategy = strategy;
  GaussInt gcd = b;
  while (true) {
    DivResult d = strategy == Strategy::min_phi ? div_min(a, b, cache) : div_norm(a, b);
    report.steps.push_back(d);
    if (is_zero(d.r)) break;
    gcd = d.r;
    a = b;
    b = d.r;
  }
  report.gcd = gcd;
  return report;
}

CoverageReport euclidean_property_check(GaussInt b) {
  if (is_zero(b)) throw std::domain_error("euclidean_property_check: zero modulus");
  if (is_unit(b)) throw std::domain_error("euclidean_property_check: unit modulus");
  RemainderTable table(b);
  return {table.complete(), table.missing_keys()};
}

}  // namespace mineuclid
