#include "ckn/tiesets.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ckn {

namespace {

void require_enumerable(const SystemConfig& config, double tol, int limit) {
  if (!(tol > 0.0))
    throw InvalidToleranceError("balance tolerance must be positive");
  if (config.n() > limit || config.n() > 63)
    throw TooLargeError("n=" + std::to_string(config.n()) +
                        " exceeds the enumeration limit of " +
                        std::to_string(std::min(limit, 63)) + " units");
}

// Next mask with the same popcount (Gosper); masks of one cardinality come
// out in increasing numeric order.
Mask next_combination(Mask c) {
  Mask low = c & (~c + 1);
  Mask carry = c + low;
  return carry | (((c ^ carry) / low) >> 2);
}

template <typename Visit>
void for_each_subset_of_size(int n, int s, Visit&& visit) {
  const Mask full = (Mask{1} << n) - 1;
  Mask c = (Mask{1} << s) - 1;
  while (c <= full) {
    visit(c);
    if (s == 0) break;
    c = next_combination(c);
  }
}

std::string format_tol(double tol) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", tol);
  return buf;
}

std::string join_indices(const UnitSet& u) {
  std::string line;
  for (std::size_t i = 0; i < u.units().size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(u.units()[i]);
  }
  return line;
}

std::vector<int> parse_index_list(std::string_view line) {
  std::vector<int> indices;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    std::string_view token = line.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(std::string(token), &used);
      if (used != token.size()) throw std::invalid_argument("trailing");
      indices.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("bad unit index '" + std::string(token) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return indices;
}

}  // namespace

TieSetCatalog::TieSetCatalog(SystemConfig config, BalanceCondition condition,
                             double tol, std::vector<UnitSet> tiesets)
    : config_(config), condition_(condition), tol_(tol), tiesets_(std::move(tiesets)) {
  if (!(tol_ > 0.0))
    throw InvalidToleranceError("balance tolerance must be positive");
  std::sort(tiesets_.begin(), tiesets_.end(), canonical_less);
  for (std::size_t i = 0; i < tiesets_.size(); ++i) {
    const UnitSet& t = tiesets_[i];
    if (t.n() != config_.n())
      throw LengthMismatchError("tie-set on n=" + std::to_string(t.n()) +
                                " in a catalog for n=" + std::to_string(config_.n()));
    if (t.size() < config_.k())
      throw Error("tie-set {" + join_indices(t) + "} has fewer than k=" +
                  std::to_string(config_.k()) + " units");
    if (!satisfies(t, condition_, tol_))
      throw Error("tie-set {" + join_indices(t) + "} does not satisfy " +
                  to_string(condition_));
    if (i > 0 && tiesets_[i - 1] == t)
      throw DuplicateError("duplicate tie-set {" + join_indices(t) + "}");
  }
  // Antichain: earlier members are no larger, so only subset containment
  // in that direction can occur.
  for (std::size_t i = 0; i < tiesets_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((tiesets_[j].mask() & tiesets_[i].mask()) == tiesets_[j].mask())
        throw Error("tie-set {" + join_indices(tiesets_[i]) +
                    "} contains tie-set {" + join_indices(tiesets_[j]) + "}");
  sizes_.reserve(tiesets_.size());
  for (const UnitSet& t : tiesets_) sizes_.push_back(t.size());
}

std::vector<UnitSet> enumerate_tiesets(const SystemConfig& config,
                                       BalanceCondition condition, double tol,
                                       int enumeration_limit) {
  require_enumerable(config, tol, enumeration_limit);
  std::vector<UnitSet> out;
  for (int s = std::max(config.k(), 1); s <= config.n(); ++s) {
    std::vector<UnitSet> of_size;
    for_each_subset_of_size(config.n(), s, [&](Mask m) {
      UnitSet u = UnitSet::from_mask(m, config.n());
      if (satisfies(u, condition, tol)) of_size.push_back(std::move(u));
    });
    std::sort(of_size.begin(), of_size.end(), canonical_less);
    out.insert(out.end(), std::make_move_iterator(of_size.begin()),
               std::make_move_iterator(of_size.end()));
  }
  return out;
}

std::vector<UnitSet> minimal_filter(const std::vector<UnitSet>& sets) {
  if (sets.empty()) return {};
  const int n = sets.front().n();
  for (const UnitSet& s : sets)
    if (s.n() != n)
      throw LengthMismatchError("unit sets span different system sizes");

  std::vector<UnitSet> sorted = sets;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<UnitSet> minimal;
  for (UnitSet& s : sorted) {
    bool dominated = false;
    for (const UnitSet& t : minimal) {
      if ((t.mask() & s.mask()) == t.mask()) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(std::move(s));
  }
  return minimal;
}

TieSetCatalog enumerate_minimum_tiesets(const SystemConfig& config,
                                        BalanceCondition condition, double tol,
                                        int enumeration_limit) {
  require_enumerable(config, tol, enumeration_limit);
  std::vector<UnitSet> accepted;
  std::vector<Mask> accepted_masks;
  for (int s = std::max(config.k(), 1); s <= config.n(); ++s) {
    for_each_subset_of_size(config.n(), s, [&](Mask m) {
      for (Mask t : accepted_masks)
        if ((t & m) == t) return;  // contains a smaller tie-set
      UnitSet u = UnitSet::from_mask(m, config.n());
      if (satisfies(u, condition, tol)) {
        accepted_masks.push_back(m);
        accepted.push_back(std::move(u));
      }
    });
  }
  return TieSetCatalog(config, condition, tol, std::move(accepted));
}

std::string to_text(const TieSetCatalog& catalog) {
  std::string out = "# n=" + std::to_string(catalog.config().n()) +
                    ",k=" + std::to_string(catalog.config().k()) +
                    ",condition=" + to_string(catalog.condition()) +
                    ",count=" + std::to_string(catalog.size()) +
                    ",tol=" + format_tol(catalog.tol()) + "\n";
  for (const UnitSet& t : catalog.tiesets()) out += join_indices(t) + "\n";
  return out;
}

TieSetCatalog catalog_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw ParseError("missing catalog header line");

  int n = -1, k = -1;
  long count = -1;
  double tol = kDefaultBalanceTol;
  std::optional<BalanceCondition> condition;
  std::istringstream header{line.substr(2)};
  std::string field;
  while (std::getline(header, field, ',')) {
    std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("bad header field '" + field + "'");
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    try {
      if (key == "n") n = std::stoi(value);
      else if (key == "k") k = std::stoi(value);
      else if (key == "condition") condition = balance_condition_from_string(value);
      else if (key == "count") count = std::stol(value);
      else if (key == "tol") tol = std::stod(value);
      else throw ParseError("unknown header field '" + key + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad header value '" + value + "' for field '" + key + "'");
    }
  }
  if (n < 0 || k < 0 || count < 0 || !condition)
    throw ParseError("header must name n, k, condition and count");

  std::vector<UnitSet> tiesets;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    tiesets.emplace_back(parse_index_list(line), n);
  }
  if (static_cast<long>(tiesets.size()) != count)
    throw ParseError("header count " + std::to_string(count) + " does not match " +
                     std::to_string(tiesets.size()) + " tie-set lines");
  return TieSetCatalog(SystemConfig(n, k), *condition, tol, std::move(tiesets));
}

std::string to_json_string(const TieSetCatalog& catalog) {
  nlohmann::ordered_json j;
  j["n"] = catalog.config().n();
  j["k"] = catalog.config().k();
  j["condition"] = to_string(catalog.condition());
  j["count"] = catalog.size();
  j["tol"] = catalog.tol();
  auto& sets = j["tiesets"] = nlohmann::ordered_json::array();
  for (const UnitSet& t : catalog.tiesets()) sets.push_back(t.units());
  return j.dump(2) + "\n";
}

}  // namespace ckn
