#include "ckn/reliability.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <exception>
#include <future>
#include <thread>

#include <json.hpp>

namespace ckn {

namespace {

void require_unit_reliability(double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw InvalidUnitReliabilityError("unit reliability must lie in [0,1] (got " +
                                      std::to_string(r) + ")");
}

// Plain power loop: exponents never exceed n, and repeated IEEE multiplies
// keep the result monotone in the base.
double pow_int(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

StateVector::StateVector(std::vector<int> states) : states_(std::move(states)) {
  if (states_.empty()) throw EmptySetError("state vector is empty");
  if (states_.size() > 63) throw TooLargeError("state vector longer than 63 units");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] != 0 && states_[i] != 1)
      throw OutOfRangeError("state of unit " + std::to_string(i + 1) +
                            " must be 0 or 1 (got " + std::to_string(states_[i]) + ")");
    if (states_[i]) mask_ |= Mask{1} << i;
  }
}

StateVector StateVector::from_mask(Mask mask, int n) {
  if (n < 1 || n > 63)
    throw OutOfRangeError("state vector length must be within 1..63");
  if (mask >> n) throw OutOfRangeError("mask selects units beyond n=" + std::to_string(n));
  std::vector<int> states(n, 0);
  for (int i = 0; i < n; ++i)
    if (mask & (Mask{1} << i)) states[i] = 1;
  return StateVector(std::move(states));
}

int structure_function(const StateVector& x, const TieSetCatalog& catalog) {
  if (x.size() != catalog.config().n())
    throw LengthMismatchError("state vector length " + std::to_string(x.size()) +
                              " does not match n=" +
                              std::to_string(catalog.config().n()));
  for (const UnitSet& t : catalog.tiesets())
    if ((x.mask() & t.mask()) == t.mask()) return 1;
  return 0;
}

double reliability_product(const TieSetCatalog& catalog, double r) {
  require_unit_reliability(r);
  double survival_gap = 1.0;  // prod(1 - r^|T|)
  for (int s : catalog.sizes()) survival_gap *= 1.0 - pow_int(r, s);
  return 1.0 - survival_gap;
}

OperationalProfile::OperationalProfile(const TieSetCatalog& catalog,
                                       int enumeration_limit)
    : n_(catalog.config().n()), counts_(static_cast<std::size_t>(n_) + 1, 0) {
  if (n_ > enumeration_limit || n_ > 63)
    throw TooLargeError("n=" + std::to_string(n_) +
                        " exceeds the enumeration limit of " +
                        std::to_string(std::min(enumeration_limit, 63)) + " units");
  const std::vector<UnitSet>& tiesets = catalog.tiesets();
  const Mask states = Mask{1} << n_;
  for (Mask x = 0; x < states; ++x) {
    for (const UnitSet& t : tiesets) {
      if ((x & t.mask()) == t.mask()) {
        ++counts_[static_cast<std::size_t>(std::popcount(x))];
        break;
      }
    }
  }
}

double OperationalProfile::reliability(double r) const {
  require_unit_reliability(r);
  double total = 0.0;
  for (int j = 0; j <= n_; ++j) {
    if (counts_[j] == 0) continue;
    total += static_cast<double>(counts_[j]) * pow_int(r, j) * pow_int(1.0 - r, n_ - j);
  }
  return total;
}

double reliability_exact(const TieSetCatalog& catalog, double r,
                         int enumeration_limit) {
  require_unit_reliability(r);
  return OperationalProfile(catalog, enumeration_limit).reliability(r);
}

namespace {

struct PairResult {
  std::vector<ReliabilityRow> rows;
  std::optional<SweepError> error;
};

PairResult evaluate_pair(const SystemConfig& config, BalanceCondition condition,
                         const std::vector<double>& r_grid, bool exact,
                         double tol, int enumeration_limit) {
  PairResult result;
  try {
    TieSetCatalog catalog = enumerate_minimum_tiesets(config, condition, tol,
                                                      enumeration_limit);
    std::optional<OperationalProfile> profile;
    if (exact) profile.emplace(catalog, enumeration_limit);
    result.rows.reserve(r_grid.size());
    for (double r : r_grid) {
      ReliabilityRow row;
      row.n = config.n();
      row.k = config.k();
      row.condition = condition;
      row.r = r;
      row.r_product = reliability_product(catalog, r);
      if (exact) row.r_exact = profile->reliability(r);
      result.rows.push_back(row);
    }
  } catch (const TooLargeError& e) {
    result.error = SweepError{config.n(), config.k(), condition, e.what()};
  }
  return result;
}

}  // namespace

ReliabilityTable sweep(const std::vector<SystemConfig>& configs,
                       const std::vector<BalanceCondition>& conditions,
                       const std::vector<double>& r_grid, bool exact, double tol,
                       int enumeration_limit) {
  if (!(tol > 0.0))
    throw InvalidToleranceError("balance tolerance must be positive");
  for (double r : r_grid) require_unit_reliability(r);

  struct Pair {
    SystemConfig config;
    BalanceCondition condition;
  };
  std::vector<Pair> pairs;
  for (const SystemConfig& config : configs)
    for (BalanceCondition condition : conditions) pairs.push_back({config, condition});

  // Pairs are independent; farm them out and merge in index order so the
  // output is identical to a sequential run.
  std::vector<PairResult> results(pairs.size());
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(pairs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      results[i] = evaluate_pair(pairs[i].config, pairs[i].condition, r_grid,
                                 exact, tol, enumeration_limit);
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < pairs.size(); i += workers)
          results[i] = evaluate_pair(pairs[i].config, pairs[i].condition, r_grid,
                                     exact, tol, enumeration_limit);
      }));
    }
    for (auto& f : futures) f.get();
  }

  ReliabilityTable table;
  for (PairResult& result : results) {
    table.rows.insert(table.rows.end(), std::make_move_iterator(result.rows.begin()),
                      std::make_move_iterator(result.rows.end()));
    if (result.error) table.errors.push_back(std::move(*result.error));
  }
  return table;
}

std::vector<CountRow> count_table(const std::vector<SystemConfig>& systems,
                                  double tol, int enumeration_limit) {
  std::vector<CountRow> rows;
  rows.reserve(systems.size());
  for (const SystemConfig& config : systems) {
    CountRow row;
    row.k = config.k();
    row.n = config.n();
    row.bc1 = static_cast<std::int64_t>(
        enumerate_minimum_tiesets(config, BalanceCondition::BC1, tol, enumeration_limit).size());
    row.bc2 = static_cast<std::int64_t>(
        enumerate_minimum_tiesets(config, BalanceCondition::BC2, tol, enumeration_limit).size());
    row.bc3 = static_cast<std::int64_t>(
        enumerate_minimum_tiesets(config, BalanceCondition::BC3, tol, enumeration_limit).size());
    row.diff21 = row.bc2 - row.bc1;
    row.diff32 = row.bc3 - row.bc2;
    rows.push_back(row);
  }
  return rows;
}

std::vector<CountRow> count_table(const std::vector<int>& n_list,
                                  const std::vector<int>& k_list, double tol,
                                  int enumeration_limit) {
  std::vector<SystemConfig> systems;
  for (int n : n_list)
    for (int k : k_list)
      if (k <= n) systems.emplace_back(n, k);
  return count_table(systems, tol, enumeration_limit);
}

std::string to_csv(const ReliabilityTable& table) {
  std::string out = "n,k,condition,r,R_product,R_exact\n";
  for (const ReliabilityRow& row : table.rows) {
    out += std::to_string(row.n) + ',' + std::to_string(row.k) + ',' +
           to_string(row.condition) + ',' + format_real(row.r) + ',' +
           format_real(row.r_product) + ',';
    if (row.r_exact) out += format_real(*row.r_exact);
    out += '\n';
  }
  return out;
}

std::string to_json_string(const ReliabilityTable& table) {
  nlohmann::ordered_json j;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const ReliabilityRow& row : table.rows) {
    nlohmann::ordered_json jr;
    jr["n"] = row.n;
    jr["k"] = row.k;
    jr["condition"] = to_string(row.condition);
    jr["r"] = row.r;
    jr["R_product"] = row.r_product;
    if (row.r_exact)
      jr["R_exact"] = *row.r_exact;
    else
      jr["R_exact"] = nullptr;
    rows.push_back(std::move(jr));
  }
  auto& errors = j["errors"] = nlohmann::ordered_json::array();
  for (const SweepError& e : table.errors) {
    nlohmann::ordered_json je;
    je["n"] = e.n;
    je["k"] = e.k;
    je["condition"] = to_string(e.condition);
    je["message"] = e.message;
    errors.push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<CountRow>& rows) {
  std::string out = "k,n,bc1,bc2,bc3,diff21,diff32\n";
  for (const CountRow& row : rows) {
    out += std::to_string(row.k) + ',' + std::to_string(row.n) + ',' +
           std::to_string(row.bc1) + ',' + std::to_string(row.bc2) + ',' +
           std::to_string(row.bc3) + ',' + std::to_string(row.diff21) + ',' +
           std::to_string(row.diff32) + '\n';
  }
  return out;
}

std::string to_json_string(const std::vector<CountRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const CountRow& row : rows) {
    nlohmann::ordered_json jr;
    jr["k"] = row.k;
    jr["n"] = row.n;
    jr["bc1"] = row.bc1;
    jr["bc2"] = row.bc2;
    jr["bc3"] = row.bc3;
    jr["diff21"] = row.diff21;
    jr["diff32"] = row.diff32;
    j.push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

}  // namespace ckn
