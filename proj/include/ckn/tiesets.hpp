#ifndef CKN_TIESETS_HPP
#define CKN_TIESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ckn/balance.hpp"
#include "ckn/core.hpp"

// Tie-set enumeration. A tie-set is a unit subset with at least k members
// that satisfies the chosen balance condition; a minimum tie-set is one no
// proper subset of which is a tie-set. The system functions exactly when
// the set of non-failed units contains some minimum tie-set.

namespace ckn {

/// All minimum tie-sets for one (n, k, condition) triple, stored in
/// canonical order (cardinality ascending, then lexicographic).
class TieSetCatalog {
 public:
  // Sorts `tiesets` canonically and validates every catalog invariant:
  // members are distinct unit sets on config.n() with at least k units,
  // each satisfies `condition` at `tol`, and no member contains another.
  TieSetCatalog(SystemConfig config, BalanceCondition condition, double tol,
                std::vector<UnitSet> tiesets);

  const SystemConfig& config() const { return config_; }
  BalanceCondition condition() const { return condition_; }
  double tol() const { return tol_; }
  const std::vector<UnitSet>& tiesets() const { return tiesets_; }

  /// Multiset of member cardinalities, ascending.
  const std::vector<int>& sizes() const { return sizes_; }

  std::size_t size() const { return tiesets_.size(); }
  bool empty() const { return tiesets_.empty(); }

  bool operator==(const TieSetCatalog&) const = default;

 private:
  SystemConfig config_;
  BalanceCondition condition_;
  double tol_;
  std::vector<UnitSet> tiesets_;
  std::vector<int> sizes_;
};

// Every subset of {1..n} with at least k units satisfying the condition,
// in canonical order. Throws TooLargeError when n exceeds the limit.
std::vector<UnitSet> enumerate_tiesets(const SystemConfig& config,
                                       BalanceCondition condition,
                                       double tol = kDefaultBalanceTol,
                                       int enumeration_limit = kMaxEnumerationUnits);

// The subset-minimal antichain of the input: keeps exactly the sets that
// contain no other input set. Input sets must be distinct and share one n.
std::vector<UnitSet> minimal_filter(const std::vector<UnitSet>& sets);

// Generation and minimality in one sweep: subsets are visited in
// increasing cardinality, and a candidate is dropped as soon as it
// contains an already-accepted tie-set, so only minimum tie-sets survive.
// Equivalent to minimal_filter(enumerate_tiesets(...)).
TieSetCatalog enumerate_minimum_tiesets(const SystemConfig& config,
                                        BalanceCondition condition,
                                        double tol = kDefaultBalanceTol,
                                        int enumeration_limit = kMaxEnumerationUnits);

// Plain-text catalog format, bit-exact across platforms:
//   # n=6,k=2,condition=BC2,count=5,tol=1e-09
//   1,4
//   ...
// one ascending index list per line after the header.
std::string to_text(const TieSetCatalog& catalog);
TieSetCatalog catalog_from_text(std::string_view text);

// Same content as a JSON object (rendered string; field order fixed).
std::string to_json_string(const TieSetCatalog& catalog);

}  // namespace ckn

#endif  // CKN_TIESETS_HPP
