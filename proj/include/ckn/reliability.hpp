#ifndef CKN_RELIABILITY_HPP
#define CKN_RELIABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckn/tiesets.hpp"

// Reliability evaluation over a minimum tie-set catalog. Two evaluators
// are first-class:
//
//   reliability_product  1 - prod(1 - r^|T|) over the catalog. Exact when
//                        the tie-sets are pairwise disjoint; otherwise an
//                        upper bound (the factorization treats tie-set
//                        survival events as independent even when they
//                        share units).
//   reliability_exact    full 2^n state enumeration of the structure
//                        function, weighting each state by its Bernoulli
//                        probability.

namespace ckn {

/// Per-unit binary states, X_i = 1 when unit i functions.
class StateVector {
 public:
  explicit StateVector(std::vector<int> states);
  static StateVector from_mask(Mask mask, int n);

  const std::vector<int>& states() const { return states_; }
  int size() const { return static_cast<int>(states_.size()); }
  Mask mask() const { return mask_; }

 private:
  std::vector<int> states_;
  Mask mask_ = 0;
};

// 1 when some catalog member has all its units functioning in x.
int structure_function(const StateVector& x, const TieSetCatalog& catalog);

double reliability_product(const TieSetCatalog& catalog, double r);

/// Operational state counts bucketed by number of functioning units,
/// built once per catalog by full state enumeration and reusable across
/// any number of unit reliabilities r.
class OperationalProfile {
 public:
  explicit OperationalProfile(const TieSetCatalog& catalog,
                              int enumeration_limit = kMaxEnumerationUnits);

  // sum_j counts[j] * r^j * (1-r)^(n-j)
  double reliability(double r) const;

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  int n() const { return n_; }

 private:
  int n_;
  std::vector<std::uint64_t> counts_;
};

double reliability_exact(const TieSetCatalog& catalog, double r,
                         int enumeration_limit = kMaxEnumerationUnits);

struct ReliabilityRow {
  int n = 0;
  int k = 0;
  BalanceCondition condition = BalanceCondition::BC1;
  double r = 0.0;
  double r_product = 0.0;
  std::optional<double> r_exact;
};

/// Enumeration failure for one (config, condition) pair of a sweep.
struct SweepError {
  int n = 0;
  int k = 0;
  BalanceCondition condition = BalanceCondition::BC1;
  std::string message;
};

struct ReliabilityTable {
  std::vector<ReliabilityRow> rows;
  std::vector<SweepError> errors;
};

// One row per (config, condition, r) in argument order. Catalogs (and the
// exact-evaluation profile, when requested) are computed once per
// (config, condition) and shared across the whole r grid; pairs are
// evaluated on a small thread pool and merged back deterministically.
// Configs whose enumeration exceeds the limit become error records.
ReliabilityTable sweep(const std::vector<SystemConfig>& configs,
                       const std::vector<BalanceCondition>& conditions,
                       const std::vector<double>& r_grid, bool exact,
                       double tol = kDefaultBalanceTol,
                       int enumeration_limit = kMaxEnumerationUnits);

/// Minimum tie-set counts for one (k, n) under all three conditions.
struct CountRow {
  int k = 0;
  int n = 0;
  std::int64_t bc1 = 0;
  std::int64_t bc2 = 0;
  std::int64_t bc3 = 0;
  std::int64_t diff21 = 0;  // bc2 - bc1
  std::int64_t diff32 = 0;  // bc3 - bc2

  bool operator==(const CountRow&) const = default;
};

std::vector<CountRow> count_table(const std::vector<SystemConfig>& systems,
                                  double tol = kDefaultBalanceTol,
                                  int enumeration_limit = kMaxEnumerationUnits);

// Cross product of the two lists, skipping pairs with k > n.
std::vector<CountRow> count_table(const std::vector<int>& n_list,
                                  const std::vector<int>& k_list,
                                  double tol = kDefaultBalanceTol,
                                  int enumeration_limit = kMaxEnumerationUnits);

// CSV with header n,k,condition,r,R_product,R_exact; reals carry 12
// significant digits and R_exact stays empty when not computed.
std::string to_csv(const ReliabilityTable& table);
std::string to_json_string(const ReliabilityTable& table);

// CSV with header k,n,bc1,bc2,bc3,diff21,diff32.
std::string to_csv(const std::vector<CountRow>& rows);
std::string to_json_string(const std::vector<CountRow>& rows);

// 12-significant-digit rendering used by every real-valued column.
std::string format_real(double value);

}  // namespace ckn

#endif  // CKN_RELIABILITY_HPP
