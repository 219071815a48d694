#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rgsurf/lattice.hpp"

namespace rgs {

// Edges of the N = 3 hexagon in counter-clockwise order, starting at E_1.
std::array<CohClass, 6> hexagon_edges();
// Consecutive edges pair to 1, others to 0, and the edges are exactly the
// N = 3 exceptional classes.
bool hexagon_adjacency_ok();

struct RotationPair {
  std::int64_t a = 0; // tangential
  std::int64_t b = 0; // normal
  bool operator==(const RotationPair &o) const = default;
  RotationPair mod(std::int64_t n) const;
  RotationPair operator-() const { return {-a, -b}; }
};

using WeightList = std::array<RotationPair, 6>;

// (a,b), (a+b,-a), (b,-a-b), (-a,-b), (-a-b,a), (-b,a+b), unreduced.
WeightList propagate_rotation(RotationPair p);
WeightList reduce(const WeightList &l, std::int64_t n);
// Weights of g^j h g^-j for g the 60 degree rotation: new[i] = l[i-j].
WeightList conjugate_by_rotation(const WeightList &l, int j);

// (-a, a+b); a = 0 means the sphere is fixed pointwise.
RotationPair other_fixed_point(RotationPair p);

bool g3_conjugation_check(RotationPair h, std::int64_t n);

// Weights at the first vertex, in units of 1/n.
struct TorusElement {
  RotationPair w;
  std::int64_t n = 1;
  TorusElement operator+(const TorusElement &o) const;
  TorusElement operator*(std::int64_t k) const;
  bool operator==(const TorusElement &o) const = default;
};

struct Gamma {
  std::int64_t n = 0, k = 0, b = 0;
  TorusElement h1, h1_tilde; // (0,k) of order n/k and (1,b) of order n
  std::vector<TorusElement> elements;
};

Gamma build_gamma(std::int64_t n, std::int64_t k, std::int64_t b);

struct G2Check {
  bool holds = false;
  std::int64_t v = 0; // least nonnegative solution of k v = b^2 + b + 1 (mod n)
};

G2Check g2_action_check(std::int64_t n, std::int64_t k, std::int64_t b);

// T(z)_i = mu_n^{c_i} z_{sigma(i)}, taken modulo scalars (c_0 = 0).
struct MonomialElement {
  std::array<int, 3> sigma{0, 1, 2};
  std::array<std::int64_t, 3> c{0, 0, 0};
  std::int64_t n = 1;

  static MonomialElement make(std::array<int, 3> sigma, std::array<std::int64_t, 3> c, std::int64_t n);
  // (x * y) applies y first
  MonomialElement operator*(const MonomialElement &y) const;
  MonomialElement inverse() const;
  MonomialElement pow(std::int64_t e) const;
  bool operator==(const MonomialElement &o) const = default;
  auto operator<=>(const MonomialElement &o) const = default;
  std::string str() const;
};

enum class ImprimitiveKind { Gn, GnTilde, Gnks, Gn32Tilde };
ImprimitiveKind parse_imprimitive_kind(const std::string &s);
const char *to_string(ImprimitiveKind k);

struct MonomialGroup {
  std::vector<MonomialElement> generators;
  std::vector<MonomialElement> elements; // sorted
};

MonomialGroup make_imprimitive(ImprimitiveKind kind, std::int64_t n, std::int64_t k = 1, std::int64_t s = 0);
std::size_t expected_order(ImprimitiveKind kind, std::int64_t n, std::int64_t k);

struct PresentationCheck {
  bool holds = false;
  std::int64_t v = 0;
};

PresentationCheck presentation_check(std::int64_t n, std::int64_t k, std::int64_t s);

struct HexagonSubgroup {
  std::size_t order = 0;
  std::string structure;                  // "Z6", "S3", "D12", ...
  std::vector<std::array<int, 6>> elements; // edge permutations, sorted
};

// Subgroups of the hexagon's automorphism group (W_3 acting on the six
// edges) that act transitively on edges.
std::vector<HexagonSubgroup> transitive_hexagon_subgroups();
// All subgroups, for inspection.
std::vector<HexagonSubgroup> hexagon_subgroups();

bool involution_nontrivial_conjugation();

} // namespace rgs
