#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the library: vectors are plain coordinate arrays (c0, c1, ..., cN)
// with pairing diag(1, -1, ..., -1).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<std::int64_t>; // row-major (N+1)^2

std::int64_t dot(const Vec &x, const Vec &y);
Vec canonical(int n);

// Pruned brute force over (a; b_1..b_N) with the Cauchy-Schwarz degree cut.
std::vector<Vec> exceptional(int n);
std::vector<Vec> roots(int n);

// Weyl group order from the degrees of the basic invariants.
std::uint64_t weyl_order_by_degrees(int n);

std::vector<Mat> closure(const std::vector<Mat> &gens, int dim);
// dim of {x : g x = x for all g} over Q
int fixed_rank(const std::vector<Mat> &gens, int dim);

// F' = -aK - F for F = H - E_1, a in [1, a_max]
std::vector<std::int64_t> fiber_pair_scan(int n, std::int64_t a_max);
// a in [a_min, -1] with -a^2 K^2 / (2a - 1) a positive integer
std::vector<std::pair<std::int64_t, std::int64_t>> obstruction_scan(int n, std::int64_t a_min);

// Largest m admitting a section of square -m and an F_2-space of fiber swap
// sets covering all fibers with every image pairing nonnegatively with it.
int swap_section_bound(int n);

// Number of ways to write target as a nonnegative combination of F, E_j,
// F - E_j (j >= 2); brute force, meant for degree <= 1.
std::size_t vertical_count(const Vec &target);

// Edge-transitive subgroups of the dihedral group of the hexagon.
std::vector<std::size_t> transitive_dihedral_subgroup_orders();

// Complex monomial matrices, projectively normalized.
std::size_t monomial_order(const std::string &kind, int n, int k, int s);
bool monomial_relations(int n, int k, int s, int v);

// Weight at vertex i is phi^i (a, b) with phi(a, b) = (a + b, -a).
std::array<std::pair<std::int64_t, std::int64_t>, 6> vertex_weights(std::int64_t a, std::int64_t b,
                                                                     std::int64_t n);

} // namespace oracle
