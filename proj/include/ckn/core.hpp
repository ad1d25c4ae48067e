#ifndef CKN_CORE_HPP
#define CKN_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Domain types for circular k-out-of-n:G balanced systems. Units are
// numbered 1..n counterclockwise around the circle; subsets are kept as
// ascending index sequences externally and as bitmasks internally
// (bit i-1 <=> unit i).

namespace ckn {

using Mask = std::uint64_t;

inline constexpr int kMinUnits = 3;

// Guard for the 2^n subset/state sweeps. A configuration limit, not an
// algorithmic ceiling; callers may raise it up to the mask width.
inline constexpr int kMaxEnumerationUnits = 24;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

class PositionOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidToleranceError : public Error {
 public:
  using Error::Error;
};

class DegenerateStepError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidUnitReliabilityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The (n, k) pair defining a circular k-out-of-n:G system.
class SystemConfig {
 public:
  SystemConfig(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  bool operator==(const SystemConfig&) const = default;

 private:
  int n_;
  int k_;
};

/// Ascending set of operating-unit indices within a system of n units.
/// Immutable after construction; safe to share across threads.
class UnitSet {
 public:
  // Validates and normalizes: indices must be nonempty, within 1..n and
  // free of duplicates; they are stored sorted ascending.
  UnitSet(std::vector<int> indices, int n);

  // Bit i-1 of `mask` selects unit i. The mask must be nonempty and fit n.
  static UnitSet from_mask(Mask mask, int n);

  const std::vector<int>& units() const { return units_; }
  int n() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const { return static_cast<int>(units_.size()); }
  bool contains(int unit) const;

  bool operator==(const UnitSet&) const = default;

 private:
  UnitSet() = default;

  std::vector<int> units_;
  int n_ = 0;
  Mask mask_ = 0;
};

// Catalog order: cardinality ascending, then lexicographic on indices.
bool canonical_less(const UnitSet& a, const UnitSet& b);

/// Circular gap sequence between consecutive operating units; sums to n.
struct DistanceTuple {
  std::vector<int> gaps;

  bool operator==(const DistanceTuple&) const = default;
};

// Gap l is u_{l+1} - u_l; the last gap wraps around: n + u_1 - u_{last}.
DistanceTuple distance_tuple(const UnitSet& u);

// Relabels every unit index by +offset around the circle (offset may be
// negative); the distance tuple of the result is a cyclic rotation.
UnitSet rotated(const UnitSet& u, int offset);

enum class BalanceCondition { BC1, BC2, BC3 };

inline constexpr BalanceCondition kAllConditions[] = {
    BalanceCondition::BC1, BalanceCondition::BC2, BalanceCondition::BC3};

std::string to_string(BalanceCondition c);
std::optional<BalanceCondition> balance_condition_from_string(std::string_view s);

}  // namespace ckn

#endif  // CKN_CORE_HPP
