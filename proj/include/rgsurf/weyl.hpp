#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rgsurf/isometry.hpp"
#include "rgsurf/lattice.hpp"

namespace rgs {

struct RootSystem {
  int n = 0;
  std::string type;                   // "A2+A1", "A4", "D5", "E6", "E7", "E8"
  std::vector<CohClass> simple_roots; // H-E1-E2-E3, E1-E2, ..., E_{N-1}-E_N
};

RootSystem root_system(int n);                  // 3 <= N <= 8
std::vector<CohClass> all_roots(int n);         // r^2 = -2, K.r = 0; sorted
std::vector<Isometry> simple_reflections(int n);

// Finite group of isometries with its full element set, stored compactly as
// int16 entries. Element 0 is the identity; the rest follow breadth-first
// order of left multiplication by generators.
class FiniteIsometryGroup {
public:
  int n() const { return n_; }
  const std::vector<Isometry> &generators() const { return gens_; }
  std::size_t order() const { return count_; }
  Isometry element(std::size_t idx) const;
  std::int64_t trace(std::size_t idx) const;
  // Elements sorted lexicographically by row-major entries.
  std::vector<Isometry> sorted_elements() const;

private:
  friend FiniteIsometryGroup generate_group(const std::vector<Isometry> &, std::size_t, int);
  int n_ = 0;
  std::vector<Isometry> gens_;
  std::vector<std::int16_t> data_;
  std::size_t count_ = 0;
};

constexpr std::size_t kDefaultGroupLimit = 10'000'000;

// Breadth-first closure. threads > 1 computes frontier products in parallel;
// insertion stays sequential, so the element order does not depend on the
// schedule. Throws LimitExceeded past `limit` elements.
FiniteIsometryGroup generate_group(const std::vector<Isometry> &gens,
                                   std::size_t limit = kDefaultGroupLimit, int threads = 1);

// Order from a stabilizer chain over a finite invariant point set. The
// action must be certifiably faithful: the points span the lattice, or they
// span the complement of K and every generator fixes K.
BigInt group_order_via_chain(const std::vector<Isometry> &gens, const std::vector<CohClass> &points);

struct InvariantLattice {
  int rank = 0;
  std::vector<CohClass> basis; // primitive, Hermite normal form
};

InvariantLattice invariant_lattice(const std::vector<Isometry> &gens, int n);
inline InvariantLattice invariant_lattice(const FiniteIsometryGroup &g) {
  return invariant_lattice(g.generators(), g.n());
}

// sum over G of tr(g | H^2)
std::int64_t character_sum(const FiniteIsometryGroup &g);

struct TraceSum {
  std::int64_t sum = 0; // sum over G of tr(g | R_N)
  bool holds = false;   // sum == 0
};

TraceSum trace_sum_condition(const FiniteIsometryGroup &g);

enum class Dichotomy { Rank1, Rank2, Neither };
const char *to_string(Dichotomy d);

struct DichotomyResult {
  Dichotomy kind = Dichotomy::Neither;
  InvariantLattice lattice;
  std::vector<CohClass> fiber_candidates; // primitive invariant F, F^2 = 0, K.F = -2
};

DichotomyResult minimality_rank_dichotomy(const std::vector<Isometry> &gens, int n);

bool fixes_canonical(const Isometry &g);

} // namespace rgs
