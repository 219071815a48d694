#pragma once

// Picard lattice of CP^2 # N(-CP^2): basis (H, E_1, ..., E_N) with pairing
// diag(+1, -1, ..., -1). Integer classes, exact rational classes, the
// canonical class and the reducedness predicates.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rgsurf/error.hpp"

namespace rgs {

using Rational = mpq_class;
using BigInt = mpz_class;

// "p/q" (or "p" when q = 1).
std::string to_string(const Rational &q);
Rational parse_rational(const std::string &text);

class PicardLattice {
public:
  explicit PicardLattice(int n_blowups);

  int n_blowups() const { return n_; }
  int rank() const { return n_ + 1; }
  // Gram matrix entry for basis vectors i, j.
  int gram(int i, int j) const { return i != j ? 0 : (i == 0 ? 1 : -1); }

private:
  int n_;
};

// c_0 H + sum_i c_i E_i. The aH - sum b_s E_s convention reads a = c_0,
// b_s = -c_s.
class CohClass {
public:
  CohClass() = default;
  explicit CohClass(std::vector<std::int64_t> coords);
  CohClass(std::initializer_list<std::int64_t> coords);

  static CohClass zero(int n);
  static CohClass h(int n);
  static CohClass e(int n, int i); // 1 <= i <= n
  // a H - sum b_s E_s
  static CohClass from_degree_form(std::int64_t a, std::span<const std::int64_t> b);

  int n() const { return static_cast<int>(coords_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t &operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t> &coords() const { return coords_; }

  std::int64_t degree() const { return coords_[0]; }
  std::int64_t b(int s) const { return -coords_[s]; }

  CohClass operator+(const CohClass &o) const;
  CohClass operator-(const CohClass &o) const;
  CohClass operator-() const;
  friend CohClass operator*(std::int64_t k, const CohClass &x);

  bool operator==(const CohClass &o) const = default;
  auto operator<=>(const CohClass &o) const = default;

  std::string str() const; // "[c0,c1,...]"

private:
  std::vector<std::int64_t> coords_;
};

// nu H - sum lambda_i E_i with exact rational entries. coords() holds the raw
// coordinates (nu, -lambda_1, ..., -lambda_N).
class SymplecticClass {
public:
  SymplecticClass() = default;
  SymplecticClass(Rational nu, std::vector<Rational> lambda);
  static SymplecticClass from_coords(std::vector<Rational> coords);
  static SymplecticClass from_class(const CohClass &c);

  int n() const { return static_cast<int>(coords_.size()) - 1; }
  const Rational &nu() const { return coords_[0]; }
  Rational lambda(int i) const { return -coords_[i]; }
  const std::vector<Rational> &coords() const { return coords_; }

  SymplecticClass operator+(const SymplecticClass &o) const;
  SymplecticClass operator-() const;
  friend SymplecticClass operator*(const Rational &k, const SymplecticClass &x);
  bool operator==(const SymplecticClass &o) const = default;

  std::string str() const;

private:
  std::vector<Rational> coords_;
};

std::int64_t pairing(const CohClass &x, const CohClass &y);
Rational pairing(const SymplecticClass &x, const CohClass &y);
Rational pairing(const CohClass &x, const SymplecticClass &y);
Rational pairing(const SymplecticClass &x, const SymplecticClass &y);

inline std::int64_t square(const CohClass &x) { return pairing(x, x); }
inline Rational square(const SymplecticClass &x) { return pairing(x, x); }
inline Rational area(const SymplecticClass &w, const CohClass &e) { return pairing(w, e); }

// -3H + E_1 + ... + E_N
CohClass canonical_class(int n);

// H - E_i - E_j (i < j) and H - E_i - E_j - E_k (i < j < k).
CohClass h_ij(int n, int i, int j);
CohClass h_ijk(int n, int i, int j, int k);

// e.x == x.x (mod 2) for every basis vector x.
bool is_characteristic(const CohClass &e);

// lambda_1 >= ... >= lambda_N > 0 and nu >= lambda_1 + lambda_2 + lambda_3.
bool is_reduced_class(const SymplecticClass &w);

// When w = t * K with t < 0, returns t; otherwise nullopt.
std::optional<Rational> monotone_factor(const SymplecticClass &w);
inline bool is_monotone(const SymplecticClass &w) { return monotone_factor(w).has_value(); }

} // namespace rgs
