#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles/oracles.hpp"
#include "rgsurf/exceptional.hpp"

using namespace rgs;

TEST_CASE("small exceptional sets") {
  const auto two = enumerate_exceptional(2).classes;
  CHECK(two == std::vector<CohClass>{CohClass{0, 0, 1}, CohClass{0, 1, 0}, CohClass{1, -1, -1}});
  const auto three = enumerate_exceptional(3).classes;
  CHECK(three.size() == 6);
  for (int i = 1; i <= 3; ++i)
    CHECK(std::count(three.begin(), three.end(), CohClass::e(3, i)) == 1);
  CHECK(std::count(three.begin(), three.end(), h_ij(3, 2, 3)) == 1);
}

TEST_CASE("exceptional sets agree with brute force") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    std::vector<std::vector<std::int64_t>> got;
    for (const auto &c : enumerate_exceptional(n).classes)
      got.push_back(c.coords());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::exceptional(n));
  }
}

TEST_CASE("degree bounded enumeration beyond N = 8") {
  CHECK_THROWS_AS(enumerate_exceptional(9), DomainError);
  const auto s = enumerate_exceptional(9, 3);
  CHECK_FALSE(s.complete);
  for (const auto &c : s.classes) {
    CHECK(is_exceptional(c));
    CHECK(c.degree() <= 3);
  }
  // K itself at N = 10 has degree -3
  CHECK(is_exceptional(canonical_class(10)));
}

TEST_CASE("Cremona reflection") {
  const int n = 4;
  CHECK(cremona_reflect(CohClass::e(n, 1), 1, 2, 3) == h_ij(n, 2, 3));
  CHECK(cremona_reflect(canonical_class(n), 1, 2, 3) == canonical_class(n));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 50; ++t) {
    CohClass x{d(rng), d(rng), d(rng), d(rng), d(rng)};
    CHECK(cremona_reflect(cremona_reflect(x, 2, 3, 4), 2, 3, 4) == x);
    CHECK(cremona_matrix(n, 2, 3, 4).apply(x) == cremona_reflect(x, 2, 3, 4));
  }
  CHECK_THROWS_AS(cremona_reflect(CohClass::e(n, 1), 1, 1, 3), DomainError);
}

TEST_CASE("exceptional reduction traces") {
  const auto one = reduce_exceptional(h_ij(3, 1, 2));
  REQUIRE(one.steps.size() == 1);
  CHECK(one.final_index == 3);
  CHECK(one.steps[0].after == CohClass::e(3, 3));

  const auto none = reduce_exceptional(CohClass::e(6, 5));
  CHECK(none.steps.empty());
  CHECK(none.final_index == 5);

  const CohClass top{6, -3, -2, -2, -2, -2, -2, -2, -2};
  REQUIRE(is_exceptional(top));
  const auto tr = reduce_exceptional(top);
  CHECK(tr.final_index >= 1);
  for (const auto &s : tr.steps)
    CHECK(s.after.degree() < s.before.degree());

  CHECK_THROWS_AS(reduce_exceptional(CohClass{1, -1, 0, 0}), DomainError);
}

TEST_CASE("symplectic reduction") {
  const auto same = reduce_symplectic(SymplecticClass(3, {1, 1, 1}));
  CHECK(same.reduced == SymplecticClass(3, {1, 1, 1}));
  CHECK(same.map.is_identity());
  CHECK(same.cremona_steps == 0);

  const auto neg = reduce_symplectic(SymplecticClass(3, {2, 1, 1}));
  CHECK(neg.cremona_steps == 1);
  CHECK(neg.reduced == SymplecticClass(2, {1, 0, 0}));
  CHECK_FALSE(neg.symplectic);

  const SymplecticClass w(4, {2, 1, 1, 1, 1});
  const auto r = reduce_symplectic(w);
  CHECK(r.symplectic);
  CHECK(is_reduced_class(r.reduced));
  CHECK(r.map.apply(w) == r.reduced);
  CHECK(r.map.apply(canonical_class(5)) == canonical_class(5));
  for (int i = 1; i <= 5; ++i)
    CHECK(r.reduced.lambda(i) > 0);

  CHECK_THROWS_AS(reduce_symplectic(SymplecticClass(1, {1, 1, 1})), DomainError);
}

TEST_CASE("symplectic reduction on unsorted input") {
  const SymplecticClass w(10, {1, 4, 2, 3});
  const auto r = reduce_symplectic(w);
  CHECK(r.reduced == SymplecticClass(10, {4, 3, 2, 1}));
  CHECK(r.map.apply(w) == r.reduced);
}

TEST_CASE("structure test") {
  CHECK(structure_test(SymplecticClass(3, {1, 1, 1})).kind == StructureKind::Monotone);
  const auto s = structure_test(SymplecticClass(4, {2, 1, 1, 1}));
  CHECK(s.kind == StructureKind::SmallFiberShape);
  CHECK(s.minimal_candidates.size() == 6);
  CHECK(structure_test(SymplecticClass(5, {2, 2, 1, 1, 1})).kind == StructureKind::Other);
  CHECK_THROWS_AS(structure_test(SymplecticClass(1, {1, 1, 1})), DomainError);
  CHECK(structure_test(SymplecticClass(4, {1, 1, 2, 1}), false).kind == StructureKind::SmallFiberShape);
}

TEST_CASE("reduced basis through minimal areas") {
  // reduced classes in the cone agree with the area characterization
  for (int b = 0; b <= 2; ++b)
    for (int n = 3; n <= 8; ++n) {
      std::vector<Rational> lam(n, Rational(1));
      lam[0] = 1 + b;
      const SymplecticClass w(3 + b, lam);
      if (square(w) <= 0)
        continue;
      CAPTURE(n);
      CHECK(is_reduced_basis_by_areas(w) == is_reduced_class(w));
    }
  CHECK_FALSE(is_reduced_basis_by_areas(SymplecticClass(10, {1, 4, 2, 3})));
}

TEST_CASE("positive exceptional classes") {
  const auto set = enumerate_exceptional(3);
  CHECK(positive_exceptional(set, SymplecticClass(3, {1, 1, 1})).size() == 6);
  CHECK(positive_exceptional(set, SymplecticClass(1, {1, 1, 1})).size() == 3);
}
