#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles/oracles.hpp"
#include "rgsurf/exceptional.hpp"
#include "rgsurf/integer_matrix.hpp"
#include "rgsurf/perm_group.hpp"
#include "rgsurf/weyl.hpp"

using namespace rgs;

namespace {

std::vector<oracle::Mat> flats(const std::vector<Isometry> &gens) {
  std::vector<oracle::Mat> out;
  for (const auto &g : gens)
    out.push_back(g.flat());
  return out;
}

} // namespace

TEST_CASE("roots agree with brute force") {
  const std::vector<std::size_t> want{8, 20, 40, 72, 126, 240};
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const auto r = all_roots(n);
    CHECK(r.size() == want[n - 3]);
    std::vector<std::vector<std::int64_t>> got;
    for (const auto &c : r) {
      CHECK(square(c) == -2);
      CHECK(pairing(canonical_class(n), c) == 0);
      got.push_back(c.coords());
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::roots(n));
  }
}

TEST_CASE("root system types") {
  CHECK(root_system(3).type == "A2+A1");
  CHECK(root_system(4).type == "A4");
  CHECK(root_system(5).type == "D5");
  CHECK(root_system(8).type == "E8");
  CHECK_THROWS_AS(root_system(9), DomainError);
}

TEST_CASE("reflections") {
  const int n = 4;
  const auto s = reflection(CohClass::e(n, 1) - CohClass::e(n, 2));
  CHECK(s.apply(CohClass::e(n, 1)) == CohClass::e(n, 2));
  CHECK(s.apply(CohClass::e(n, 3)) == CohClass::e(n, 3));
  CHECK((s * s).is_identity());
  CHECK(preserves_pairing(s));
  CHECK(reflection(h_ijk(n, 1, 2, 3)).apply(CohClass::e(n, 1)) == h_ij(n, 2, 3));
  CHECK_THROWS_AS(reflection(CohClass::e(n, 1)), DomainError);
}

TEST_CASE("isometry algebra") {
  const auto gens = simple_reflections(5);
  const Isometry g = gens[0] * gens[1] * gens[3];
  CHECK((g * g.inverse()).is_identity());
  CHECK(preserves_pairing(g));
  Isometry bad = Isometry::identity(3);
  bad(0, 0) = 2;
  const auto w = pairing_defect(bad);
  REQUIRE(w.has_value());
  CHECK(w->i == 0);
  CHECK(w->got == 4);
}

TEST_CASE("closure orders match the invariant degrees") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto g = generate_group(simple_reflections(n));
    CHECK(g.order() == oracle::weyl_order_by_degrees(n));
    CHECK(g.element(0).is_identity());
  }
  CHECK(generate_group(simple_reflections(5)).order() ==
        oracle::closure(flats(simple_reflections(5)), 6).size());
}

TEST_CASE("threaded closure gives the same elements") {
  const auto a = generate_group(simple_reflections(6), kDefaultGroupLimit, 1);
  const auto b = generate_group(simple_reflections(6), kDefaultGroupLimit, 3);
  REQUIRE(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); i += 997)
    CHECK(a.element(i) == b.element(i));
}

TEST_CASE("closure limit") {
  CHECK_THROWS_AS(generate_group(simple_reflections(6), 1000), LimitExceeded);
}

TEST_CASE("stabilizer chain orders") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const BigInt o = group_order_via_chain(simple_reflections(n), all_roots(n));
    CHECK(o == static_cast<unsigned long>(oracle::weyl_order_by_degrees(n)));
  }
  // exceptional classes span the whole lattice
  CHECK(group_order_via_chain(simple_reflections(8), enumerate_exceptional(8).classes) == 696729600);
  CHECK_THROWS_AS(group_order_via_chain(simple_reflections(4), {CohClass::e(4, 1)}), DomainError);
}

TEST_CASE("permutation group basics") {
  const Perm a{1, 2, 0, 3}, b{1, 0, 2, 3};
  StabilizerChain c(4, {a, b});
  CHECK(c.order() == 6);
  CHECK(c.contains(perm_mul(a, b)));
  CHECK_FALSE(c.contains(Perm{0, 1, 3, 2}));
  StabilizerChain s4(4, {Perm{1, 2, 3, 0}, b});
  CHECK(s4.order() == 24);
}

TEST_CASE("integer kernels") {
  // x + y + z = 0
  const auto k = integer_kernel({{BigInt(1), BigInt(1), BigInt(1)}}, 3);
  CHECK(k.size() == 2);
  for (const auto &v : k)
    CHECK(v[0] + v[1] + v[2] == 0);
  // 2x = 0 over Z has only the zero solution, 2x - 2y = 0 is saturated
  CHECK(integer_kernel({{BigInt(2), BigInt(-2)}}, 2) == BigMatrix{{BigInt(1), BigInt(1)}});
  CHECK(rank_over_q({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 1);
}

TEST_CASE("invariant lattices") {
  const int n = 4;
  CHECK(invariant_lattice({Isometry::identity(n)}, n).rank == n + 1);
  const auto w = invariant_lattice(simple_reflections(n), n);
  CHECK(w.rank == 1);
  REQUIRE(w.basis.size() == 1);
  CHECK((w.basis[0] == canonical_class(n) || w.basis[0] == -canonical_class(n)));
}

TEST_CASE("trace sums") {
  const auto w4 = generate_group(simple_reflections(4));
  CHECK(trace_sum_condition(w4).sum == 0);
  CHECK(trace_sum_condition(w4).holds);
  const auto id = generate_group({Isometry::identity(4)});
  CHECK(trace_sum_condition(id).sum == 4);
  CHECK_FALSE(trace_sum_condition(id).holds);
  const auto s = generate_group({reflection(CohClass::e(4, 1) - CohClass::e(4, 2))});
  CHECK(trace_sum_condition(s).sum == 6);
  CHECK_FALSE(trace_sum_condition(s).holds);
}

TEST_CASE("trace and rank agree with a rational oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;
    const auto simple = simple_reflections(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(simple.size()) - 1);
    std::vector<Isometry> gens;
    for (int g = 0; g < 2; ++g) {
      Isometry w = Isometry::identity(n);
      for (int l = 0; l < 3; ++l)
        w = simple[pick(rng)] * w;
      gens.push_back(w);
    }
    const auto grp = generate_group(gens);
    const auto lat = invariant_lattice(grp);
    CHECK(lat.rank == oracle::fixed_rank(flats(gens), n + 1));
    std::int64_t tr = 0;
    for (const auto &m : oracle::closure(flats(gens), n + 1))
      for (int i = 0; i <= n; ++i)
        tr += m[i * (n + 1) + i];
    CHECK(character_sum(grp) == tr);
    CHECK(static_cast<std::int64_t>(grp.order()) * lat.rank == tr);
  }
}

TEST_CASE("dichotomy") {
  CHECK(minimality_rank_dichotomy(simple_reflections(5), 5).kind == Dichotomy::Rank1);
  const auto ne = minimality_rank_dichotomy({reflection(CohClass::e(5, 1) - CohClass::e(5, 2))}, 5);
  CHECK(ne.kind == Dichotomy::Neither);
  // permutations of E_2..E_5 fix F = H - E_1 and K
  const auto p1 = Isometry::permutation(5, {1, 3, 4, 5, 2});
  const auto p2 = Isometry::permutation(5, {1, 3, 2, 4, 5});
  // swap every fiber component: E_j <-> H - E_1 - E_j, j = 2..5
  const auto sw = [&] {
    Isometry m = Isometry::identity(5);
    // E_1 -> E_1 + 2F - E_2 - ... - E_5; H = F + E_1
    const CohClass f = CohClass::h(5) - CohClass::e(5, 1);
    const CohClass e1 = CohClass::e(5, 1) + 2 * f - CohClass::e(5, 2) - CohClass::e(5, 3) - CohClass::e(5, 4) -
                        CohClass::e(5, 5);
    const CohClass h = f + e1;
    for (int r = 0; r <= 5; ++r) {
      m(r, 0) = h[r];
      m(r, 1) = e1[r];
    }
    for (int j = 2; j <= 5; ++j) {
      const CohClass img = f - CohClass::e(5, j);
      for (int r = 0; r <= 5; ++r)
        m(r, j) = img[r];
    }
    return m;
  }();
  REQUIRE(preserves_pairing(sw));
  const auto d = minimality_rank_dichotomy({p1, p2, sw}, 5);
  CHECK(d.kind == Dichotomy::Rank2);
  CHECK(std::count(d.fiber_candidates.begin(), d.fiber_candidates.end(), CohClass::h(5) - CohClass::e(5, 1)) == 1);
  for (const auto &f : d.fiber_candidates) {
    CHECK(square(f) == 0);
    CHECK(pairing(canonical_class(5), f) == -2);
  }
}
