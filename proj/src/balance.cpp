#include "ckn/balance.hpp"

#include <cmath>
#include <numbers>

namespace ckn {

namespace {

// Neumaier-compensated accumulator; keeps the rounding residue of every
// add so that exactly-cancelling angle sums land at ~1e-16 instead of
// drifting with the summation order.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

DistanceTuple reverse_tuple(const DistanceTuple& d, int position) {
  const int m = static_cast<int>(d.gaps.size());
  if (position < 1 || position > m)
    throw PositionOutOfRangeError("reverse position " + std::to_string(position) +
                                  " outside 1.." + std::to_string(m));
  DistanceTuple out;
  out.gaps.reserve(m);
  // d_l, d_{l-1}, ..., d_1
  for (int i = position; i >= 1; --i) out.gaps.push_back(d.gaps[i - 1]);
  // d_m, d_{m-1}, ..., d_{l+1}
  for (int i = m; i > position; --i) out.gaps.push_back(d.gaps[i - 1]);
  return out;
}

SymmetryProfile count_symmetry_axes(const UnitSet& u) {
  const DistanceTuple d = distance_tuple(u);
  const int m = static_cast<int>(d.gaps.size());
  SymmetryProfile profile;
  for (int l = 1; l <= m; ++l) {
    if (reverse_tuple(d, l) == d) profile.matching_positions.push_back(l);
  }
  profile.axis_count = static_cast<int>(profile.matching_positions.size());
  return profile;
}

bool check_bc1(const UnitSet& u) {
  int axes = count_symmetry_axes(u).axis_count;
  return axes > 0 && axes % 2 == 0;
}

bool check_bc2(const UnitSet& u) {
  return count_symmetry_axes(u).axis_count > 1;
}

CenterOfGravity center_of_gravity(const UnitSet& u) {
  const double theta = 2.0 * std::numbers::pi / u.n();
  CompensatedSum sx, sy;
  for (int unit : u.units()) {
    const double angle = (unit - 1) * theta;
    sx.add(std::cos(angle));
    sy.add(std::sin(angle));
  }
  CenterOfGravity cog;
  cog.x = sx.value() / u.size();
  cog.y = sy.value() / u.size();
  cog.norm = std::hypot(cog.x, cog.y);
  return cog;
}

bool check_bc3(const UnitSet& u, double tol) {
  if (!(tol > 0.0))
    throw InvalidToleranceError("balance tolerance must be positive");
  return center_of_gravity(u).norm <= tol;
}

BalanceReport classify(const UnitSet& u, double tol) {
  if (!(tol > 0.0))
    throw InvalidToleranceError("balance tolerance must be positive");
  BalanceReport report;
  report.axis_count = count_symmetry_axes(u).axis_count;
  report.cog = center_of_gravity(u);
  report.bc1 = check_bc1(u);
  report.bc2 = check_bc2(u);
  report.bc3 = check_bc3(u, tol);
  return report;
}

bool satisfies(const UnitSet& u, BalanceCondition condition, double tol) {
  switch (condition) {
    case BalanceCondition::BC1: return check_bc1(u);
    case BalanceCondition::BC2: return check_bc2(u);
    case BalanceCondition::BC3: return check_bc3(u, tol);
  }
  return false;
}

TrigSum trig_progression_sum(double a, double d, int m) {
  if (m < 1) throw Error("term count must be positive (got " + std::to_string(m) + ")");
  const double half_sin = std::sin(d / 2.0);
  if (half_sin == 0.0)
    throw DegenerateStepError("step is a multiple of 2*pi; closed form undefined");
  const double ratio = std::sin(m * d / 2.0) / half_sin;
  const double phase = a + (m - 1) * d / 2.0;
  return {ratio * std::cos(phase), ratio * std::sin(phase)};
}

}  // namespace ckn
