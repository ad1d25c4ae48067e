#ifndef CKN_BALANCE_HPP
#define CKN_BALANCE_HPP

#include <vector>

#include "ckn/core.hpp"

// The three balance predicates for circular k-out-of-n:G systems:
//
//   BC1 (symmetry):        the operating units have a nonzero even number
//                          of symmetry axes.
//   BC2 (proportionality): more than one symmetry axis.
//   BC3 (center of gravity): the mean of the operating units' unit-circle
//                          coordinates is the origin.
//
// BC1 implies BC2 implies BC3; the converses fail in general.

namespace ckn {

inline constexpr double kDefaultBalanceTol = 1e-9;

/// Symmetry-axis census of a unit set: the positions l where reading the
/// distance tuple backwards from gap l reproduces the tuple itself.
struct SymmetryProfile {
  int axis_count = 0;
  std::vector<int> matching_positions;  // ascending, 1-based
};

struct CenterOfGravity {
  double x = 0.0;
  double y = 0.0;
  double norm = 0.0;
};

struct BalanceReport {
  int axis_count = 0;
  CenterOfGravity cog;
  bool bc1 = false;
  bool bc2 = false;
  bool bc3 = false;
};

// Reversal of D starting at gap `position` (1-based):
// (d_l, d_{l-1}, ..., d_1, d_m, d_{m-1}, ..., d_{l+1}) for m gaps.
// Throws PositionOutOfRangeError unless 1 <= position <= m.
DistanceTuple reverse_tuple(const DistanceTuple& d, int position);

// Each position whose reversal fixes the distance tuple marks one axis of
// symmetry of the operating set.
SymmetryProfile count_symmetry_axes(const UnitSet& u);

bool check_bc1(const UnitSet& u);
bool check_bc2(const UnitSet& u);

// Unit i sits at angle (i-1) * 2*pi/n on the unit circle; the center of
// gravity is the coordinate mean over the operating units, accumulated
// with compensated summation.
CenterOfGravity center_of_gravity(const UnitSet& u);

bool check_bc3(const UnitSet& u, double tol = kDefaultBalanceTol);

// All three predicates evaluated independently plus the quantities behind
// them. Throws InvalidToleranceError when tol <= 0.
BalanceReport classify(const UnitSet& u, double tol = kDefaultBalanceTol);

bool satisfies(const UnitSet& u, BalanceCondition condition,
               double tol = kDefaultBalanceTol);

struct TrigSum {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
};

// Closed form of sum_{j=0}^{m-1} cos(a + j*d) and the matching sine sum:
//   sin(m*d/2)/sin(d/2) * cos(a + (m-1)*d/2)   (cosine part)
//   sin(m*d/2)/sin(d/2) * sin(a + (m-1)*d/2)   (sine part)
// Throws DegenerateStepError when sin(d/2) == 0 (d a multiple of 2*pi).
TrigSum trig_progression_sum(double a, double d, int m);

}  // namespace ckn

#endif  // CKN_BALANCE_HPP
