#include "ckn/core.hpp"

#include <algorithm>
#include <bit>

namespace ckn {

SystemConfig::SystemConfig(int n, int k) : n_(n), k_(k) {
  if (n < kMinUnits)
    throw OutOfRangeError("n must be at least " + std::to_string(kMinUnits) +
                          " (got " + std::to_string(n) + ")");
  if (k < 1 || k > n)
    throw OutOfRangeError("k must be within 1.." + std::to_string(n) +
                          " (got " + std::to_string(k) + ")");
}

UnitSet::UnitSet(std::vector<int> indices, int n) : units_(std::move(indices)), n_(n) {
  if (n_ < 1) throw OutOfRangeError("system size must be positive (got " + std::to_string(n_) + ")");
  if (units_.empty()) throw EmptySetError("unit set is empty");
  std::sort(units_.begin(), units_.end());
  for (std::size_t i = 0; i < units_.size(); ++i) {
    int u = units_[i];
    if (u < 1 || u > n_)
      throw OutOfRangeError("unit index " + std::to_string(u) +
                            " outside 1.." + std::to_string(n_));
    if (i > 0 && units_[i - 1] == u)
      throw DuplicateError("duplicate unit index " + std::to_string(u));
    mask_ |= Mask{1} << (u - 1);
  }
}

UnitSet UnitSet::from_mask(Mask mask, int n) {
  if (n < 1 || n > 63)
    throw OutOfRangeError("system size must be within 1..63 (got " + std::to_string(n) + ")");
  if (mask == 0) throw EmptySetError("unit set is empty");
  if (mask >> n) throw OutOfRangeError("mask selects units beyond n=" + std::to_string(n));
  UnitSet u;
  u.n_ = n;
  u.mask_ = mask;
  u.units_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (int i = 1; i <= n; ++i)
    if (mask & (Mask{1} << (i - 1))) u.units_.push_back(i);
  return u;
}

bool UnitSet::contains(int unit) const {
  return unit >= 1 && unit <= n_ && (mask_ & (Mask{1} << (unit - 1)));
}

bool canonical_less(const UnitSet& a, const UnitSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.units() < b.units();
}

DistanceTuple distance_tuple(const UnitSet& u) {
  const auto& units = u.units();
  const int m = u.size();
  DistanceTuple d;
  d.gaps.resize(m);
  for (int l = 0; l + 1 < m; ++l) d.gaps[l] = units[l + 1] - units[l];
  d.gaps[m - 1] = u.n() + units[0] - units[m - 1];
  return d;
}

UnitSet rotated(const UnitSet& u, int offset) {
  const int n = u.n();
  std::vector<int> shifted;
  shifted.reserve(u.units().size());
  for (int unit : u.units()) {
    int zero_based = (unit - 1 + offset) % n;
    if (zero_based < 0) zero_based += n;
    shifted.push_back(zero_based + 1);
  }
  return UnitSet(std::move(shifted), n);
}

std::string to_string(BalanceCondition c) {
  switch (c) {
    case BalanceCondition::BC1: return "BC1";
    case BalanceCondition::BC2: return "BC2";
    case BalanceCondition::BC3: return "BC3";
  }
  return "BC?";
}

std::optional<BalanceCondition> balance_condition_from_string(std::string_view s) {
  if (s == "BC1" || s == "bc1") return BalanceCondition::BC1;
  if (s == "BC2" || s == "bc2") return BalanceCondition::BC2;
  if (s == "BC3" || s == "bc3") return BalanceCondition::BC3;
  return std::nullopt;
}

}  // namespace ckn
