#pragma once

#include <optional>
#include <vector>

#include "rgsurf/isometry.hpp"
#include "rgsurf/lattice.hpp"

namespace rgs {

struct ExceptionalSet {
  int n = 0;
  std::vector<CohClass> classes; // sorted by degree, then coordinates
  bool complete = false;         // false when truncated by a degree bound (N >= 9)
  std::int64_t max_degree = 0;   // largest degree searched
};

// e^2 = -1 and K.e = -1
bool is_exceptional(const CohClass &e);

// All solutions of e^2 = -1, K.e = -1. Complete for N <= 8; for N >= 9
// max_degree is required and the result covers degrees 0..max_degree.
ExceptionalSet enumerate_exceptional(int n, std::optional<std::int64_t> max_degree = std::nullopt);

// Classes of the set with positive area.
std::vector<CohClass> positive_exceptional(const ExceptionalSet &set, const SymplecticClass &w);

// R(H_ijk) x = x + (x.H_ijk) H_ijk, 1 <= i < j < k <= N.
CohClass cremona_reflect(const CohClass &x, int i, int j, int k);
Isometry cremona_matrix(int n, int i, int j, int k);

struct ReductionStep {
  int i, j, k;
  CohClass before, after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  int final_index = 0; // l with final class E_l
};

// Reflect in H_ijk over the three largest b (ties: smallest index) until the
// degree reaches 0.
ReductionTrace reduce_exceptional(const CohClass &e);

struct SymplecticReduction {
  SymplecticClass reduced;
  Isometry map; // map.apply(input) == reduced; fixes K
  int cremona_steps = 0;
  bool symplectic = true; // false when some area of E_i or nu is <= 0
};

SymplecticReduction reduce_symplectic(const SymplecticClass &w, int max_iters = 10000);

enum class StructureKind { Monotone, SmallFiberShape, Other };
const char *to_string(StructureKind k);

struct StructureResult {
  StructureKind kind = StructureKind::Other;
  SymplecticClass reduced;
  std::vector<CohClass> minimal_candidates; // {E_j, H-E_1-E_j : j > 1} for SmallFiberShape
};

// basis_reduced = true: w must already satisfy is_reduced_class.
// basis_reduced = false: w is run through reduce_symplectic first.
StructureResult structure_test(const SymplecticClass &w, bool basis_reduced = true);

// Reduced basis defined through minimal areas: area(E_N) is the minimum over
// positive exceptional classes, and area(E_i) the minimum over those
// orthogonal to E_{i+1}, ..., E_N. N <= 8.
bool is_reduced_basis_by_areas(const SymplecticClass &w);

} // namespace rgs
