#pragma once

#include <optional>
#include <vector>

#include "rgsurf/lattice.hpp"

namespace rgs {

enum class ConeVerdict { Full, PartialPositive, Outside };
const char *to_string(ConeVerdict v);

struct ConeCheck {
  ConeVerdict verdict = ConeVerdict::Outside;
  std::optional<CohClass> witness; // exceptional class with area <= 0
  std::int64_t degree_bound = 0;   // degrees searched
  std::size_t classes_checked = 0;
};

// w^2 > 0 and w.e > 0 over the exceptional classes. Exact for N <= 8;
// for N >= 9 only classes of degree <= degree_bound are checked.
ConeCheck is_in_cone(const SymplecticClass &w, std::int64_t degree_bound = 5);

struct CanonicalSign {
  int sign = 1;
  Rational b;            // sign * w = t (-K0 + b F) with t > 0
  bool reduced = false;  // sign * w is a reduced class after sorting (N >= 3)
};

// w in span{K0, F} (F defaults to H - E_1), w^2 > 0.
CanonicalSign canonical_sign(const SymplecticClass &w, const CohClass &k0);
CanonicalSign canonical_sign(const SymplecticClass &w, const CohClass &k0, const CohClass &f);

struct FiberPair {
  std::int64_t a = 0; // F + F' = -a K
  CohClass f_prime;
};

// Second fiber classes F' = -aK - F with F'^2 = 0, K.F' = -2, F.F' = 2a > 0,
// for F = H - E_1.
std::vector<FiberPair> fiber_pairs(int n);

struct Obstruction {
  std::int64_t a = 0;
  std::int64_t m = 0;
};

// Integers a in [a_min, -1] with m = -a^2 K^2 / (2a - 1) a positive integer.
std::vector<Obstruction> blowdown_obstruction(int n, std::int64_t a_min);

// Rescale w so w.F = 2 and return delta with w = -K0 + delta F.
Rational delta(const SymplecticClass &w, const CohClass &f, const CohClass &k0);

struct ConeSlice {
  std::vector<std::pair<Rational, bool>> samples; // sorted by delta
  std::optional<Rational> last_outside;           // threshold bracket (last_outside, first_inside]
  std::optional<Rational> first_inside;
  bool full_mode = true;                          // N <= 8
};

// Membership of -K0 + delta F over the grid; throws TheoremViolation when
// membership is not monotone in delta.
ConeSlice slice_scan(int n, const CohClass &f, const CohClass &k0, std::vector<Rational> grid,
                     std::int64_t degree_bound = 5);

// With |G0| = m > 1 declared the fiber class must be unique.
bool fiber_uniqueness_consistent(std::size_t candidate_count, int g0_order);

} // namespace rgs
