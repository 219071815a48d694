#pragma once

#include <vector>

#include "rgsurf/lattice.hpp"

namespace rgs {

using BigVector = std::vector<BigInt>;
using BigMatrix = std::vector<BigVector>; // row-major

// Basis of {x in Z^cols : A x = 0}. The basis spans a saturated sublattice
// (it comes from a unimodular transform) and is returned in row Hermite
// normal form.
BigMatrix integer_kernel(const BigMatrix &a, int cols);

// Row Hermite normal form of the lattice spanned by the rows; zero rows dropped.
BigMatrix hermite_rows(BigMatrix rows);

int rank_over_q(BigMatrix a);

} // namespace rgs
