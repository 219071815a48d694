#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgsurf/lattice.hpp"

namespace rgs {

// Square integer matrix acting on coordinate columns: y = M x.
class Isometry {
public:
  Isometry() = default;
  // rows: (N+1) rows of N+1 entries each
  static Isometry from_rows(const std::vector<std::vector<std::int64_t>> &rows);
  static Isometry from_flat(int n, std::vector<std::int64_t> entries);
  static Isometry identity(int n);
  // E_i -> E_{perm[i-1]}, H fixed. perm is a permutation of 1..N.
  static Isometry permutation(int n, const std::vector<int> &perm);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim() + c]; }
  std::int64_t &operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim() + c]; }
  const std::vector<std::int64_t> &flat() const { return a_; }
  std::vector<std::vector<std::int64_t>> rows() const;

  CohClass apply(const CohClass &x) const;
  SymplecticClass apply(const SymplecticClass &x) const;
  // Column j, i.e. the image of the j-th basis vector.
  CohClass image_of_basis(int j) const;

  Isometry operator*(const Isometry &o) const; // (A*B)x = A(Bx)
  bool operator==(const Isometry &o) const = default;
  auto operator<=>(const Isometry &o) const = default;

  // Q M^T Q, valid when the matrix preserves the pairing.
  Isometry inverse() const;
  std::int64_t trace() const;
  bool is_identity() const;

private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

struct PairingWitness {
  int i, j;
  std::int64_t got, expected;
  std::string str() const;
};

// nullopt when M^T Q M = Q, otherwise the first offending basis pair.
std::optional<PairingWitness> pairing_defect(const Isometry &g);
inline bool preserves_pairing(const Isometry &g) { return !pairing_defect(g); }

// x -> x + (x.alpha) alpha, for alpha^2 = -2.
Isometry reflection(const CohClass &alpha);

} // namespace rgs
