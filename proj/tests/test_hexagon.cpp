#include "doctest.h"

#include "oracles/oracles.hpp"
#include "rgsurf/hexagon.hpp"

using namespace rgs;

TEST_CASE("hexagon edges") {
  CHECK(hexagon_adjacency_ok());
  const auto e = hexagon_edges();
  CHECK(e[5] == h_ij(3, 1, 3));
}

TEST_CASE("rotation propagation") {
  const WeightList first{RotationPair{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
  CHECK(propagate_rotation({1, 0}) == first);
  const WeightList second{RotationPair{1, 1}, {0, -1}, {1, 0}, {-1, -1}, {0, 1}, {-1, 0}};
  CHECK(reduce(propagate_rotation({1, 1}), 2) == reduce(second, 2));
  for (const auto &p : propagate_rotation({0, 0}))
    CHECK(p == RotationPair{0, 0});
  const auto l = propagate_rotation({2, 5});
  for (int i = 0; i < 6; ++i) {
    const auto &a = l[i], &b = l[(i + 1) % 6];
    CHECK(b == RotationPair{a.a + a.b, -a.a});
  }
  const auto neg = propagate_rotation({-2, -5});
  for (int i = 0; i < 6; ++i)
    CHECK(neg[i] == -l[i]);
  for (std::int64_t n = 2; n <= 9; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        const auto got = reduce(propagate_rotation({a, b}), n);
        const auto want = oracle::vertex_weights(a, b, n);
        for (int i = 0; i < 6; ++i)
          CHECK(std::make_pair(got[i].a, got[i].b) == want[i]);
      }
}

TEST_CASE("other fixed point") {
  CHECK(other_fixed_point({1, 0}) == RotationPair{-1, 1});
  CHECK(other_fixed_point({1, 1}) == RotationPair{-1, 2});
  CHECK(other_fixed_point(other_fixed_point({3, 4})) == RotationPair{3, 4});
  CHECK_THROWS_AS(other_fixed_point({0, 1}), DomainError);
}

TEST_CASE("g^3 conjugation") {
  CHECK(g3_conjugation_check({1, 0}, 4));
  CHECK(g3_conjugation_check({2, 3}, 7));
  CHECK(g3_conjugation_check({0, 0}, 5));
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        CHECK(g3_conjugation_check({a, b}, n));
}

TEST_CASE("gamma") {
  CHECK(build_gamma(5, 1, 0).elements.size() == 25);
  CHECK(build_gamma(3, 3, 1).elements.size() == 3);
  CHECK(build_gamma(6, 3, 1).elements.size() == 12);
  CHECK_THROWS_AS(build_gamma(4, 3, 1), DomainError);
  CHECK_THROWS_AS(build_gamma(6, 3, 0), DomainError);
}

TEST_CASE("g^2 action") {
  const auto a = g2_action_check(5, 1, 0);
  CHECK(a.holds);
  CHECK(a.v == 1);
  const auto b = g2_action_check(9, 3, 7);
  CHECK(b.holds);
  CHECK(b.v == 1);
  CHECK_THROWS_AS(g2_action_check(4, 3, 0), DomainError);
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      for (std::int64_t bb = 0; bb < n; ++bb)
        if (n % k == 0 && (bb * bb + bb + 1) % k == 0)
          CHECK(g2_action_check(n, k, bb).holds);
}

TEST_CASE("monomial elements") {
  using M = MonomialElement;
  const int n = 5;
  const M a = M::make({2, 0, 1}, {0, 3, 1}, n), b = M::make({1, 0, 2}, {2, 2, 0}, n),
          c = M::make({0, 2, 1}, {0, 1, 4}, n);
  CHECK((a * b) * c == a * (b * c));
  const M id = M::make({0, 1, 2}, {0, 0, 0}, n);
  CHECK(a * id == a);
  CHECK(a * a.inverse() == id);
  CHECK(M::make({0, 1, 2}, {2, 2, 2}, n) == id);
  CHECK(a.c[0] == 0);
  CHECK(a.pow(3) * a.pow(-3) == id);
  CHECK_THROWS_AS(M::make({0, 0, 1}, {0, 0, 0}, n), DomainError);
}

TEST_CASE("imprimitive group orders") {
  CHECK(make_imprimitive(ImprimitiveKind::Gn, 2).elements.size() == 12);
  CHECK(make_imprimitive(ImprimitiveKind::Gnks, 3, 3, 2).elements.size() == 9);
  CHECK(make_imprimitive(ImprimitiveKind::GnTilde, 2).elements.size() == 24);
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(make_imprimitive(ImprimitiveKind::Gn, n).elements.size() == oracle::monomial_order("Gn", n, 1, 0));
    CHECK(make_imprimitive(ImprimitiveKind::GnTilde, n).elements.size() ==
          oracle::monomial_order("GnTilde", n, 1, 0));
    if (n % 3 == 0)
      CHECK(make_imprimitive(ImprimitiveKind::Gn32Tilde, n).elements.size() ==
            oracle::monomial_order("Gn32Tilde", n, 3, 2));
    for (int k = 2; k <= n; ++k)
      for (int s = 0; s < n; ++s)
        if (n % k == 0 && (s * s - s + 1) % k == 0) {
          const auto g = make_imprimitive(ImprimitiveKind::Gnks, n, k, s);
          CHECK(g.elements.size() == oracle::monomial_order("Gnks", n, k, s));
          CHECK(g.elements.size() * k == make_imprimitive(ImprimitiveKind::Gn, n).elements.size());
        }
  }
  CHECK_THROWS_AS(make_imprimitive(ImprimitiveKind::Gnks, 6, 2, 1), DomainError);
  CHECK_THROWS_AS(make_imprimitive(ImprimitiveKind::Gn32Tilde, 4), DomainError);
  CHECK(parse_imprimitive_kind("Gnks") == ImprimitiveKind::Gnks);
  CHECK_THROWS_AS(parse_imprimitive_kind("G"), DomainError);
}

TEST_CASE("presentations") {
  const auto a = presentation_check(5, 1, 0);
  CHECK(a.holds);
  CHECK(oracle::monomial_relations(5, 1, 0, static_cast<int>(a.v)));
  const auto b = presentation_check(9, 3, 2);
  CHECK(b.holds);
  CHECK(oracle::monomial_relations(9, 3, 2, static_cast<int>(b.v)));
  CHECK_THROWS_AS(presentation_check(6, 2, 1), DomainError);
  for (int s = 0; s < 6; ++s)
    CHECK_THROWS_AS(presentation_check(6, 2, s), DomainError);
}

TEST_CASE("hexagon subgroups") {
  CHECK(hexagon_subgroups().size() == 16);
  std::vector<std::size_t> orders;
  for (const auto &s : transitive_hexagon_subgroups())
    orders.push_back(s.elements.size());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == oracle::transitive_dihedral_subgroup_orders());
  // Z6, the S3 generated by reflections through opposite vertices, and D12
  CHECK(orders == std::vector<std::size_t>{6, 6, 12});
}

TEST_CASE("involutions are moved by the rotation") {
  CHECK(involution_nontrivial_conjugation());
  const auto id = reduce(propagate_rotation({0, 0}), 2);
  CHECK(conjugate_by_rotation(id, 1) == id);
}
