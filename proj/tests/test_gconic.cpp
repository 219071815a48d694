#include "doctest.h"

#include <algorithm>

#include "oracles/oracles.hpp"
#include "rgsurf/gconic.hpp"

using namespace rgs;

namespace {

std::vector<int> fibers(int from, int to) {
  std::vector<int> f;
  for (int j = from; j <= to; ++j)
    f.push_back(j);
  return f;
}

} // namespace

TEST_CASE("standard model") {
  const auto m = ConicBundleModel::standard(6);
  CHECK(square(m.fiber()) == 0);
  CHECK(pairing(canonical_class(6), m.fiber()) == -2);
  for (int j = 2; j <= 6; ++j) {
    CHECK(m.comp(j) + m.other(j) == m.fiber());
    CHECK(square(m.comp(j)) == -1);
    CHECK(square(m.other(j)) == -1);
    CHECK(pairing(m.comp(j), m.other(j)) == 1);
  }
}

TEST_CASE("fiber actions") {
  const int n = 5;
  const auto m = ConicBundleModel::standard(n);
  const auto id = fiber_action(Isometry::identity(n), m);
  CHECK(id.is_identity());
  const auto full = fiber_action(swap_isometry(n, fibers(2, n)), m);
  CHECK(full.trivial_on_base());
  CHECK(full.full_swap());
  CHECK(full.swap_count() == 4);
  CHECK_THROWS_AS(fiber_action(reflection(CohClass::e(n, 1) - CohClass::e(n, 2)), m), DomainError);
  const auto p = Isometry::permutation(n, {1, 3, 2, 4, 5});
  const auto pa = fiber_action(p, m);
  CHECK_FALSE(pa.trivial_on_base());
  CHECK(compose(pa, full) == fiber_action(p * swap_isometry(n, fibers(2, n)), m));
}

TEST_CASE("isometries from fiber actions") {
  const int n = 6;
  const auto g = swap_isometry(n, {2, 4});
  CHECK(preserves_pairing(g));
  CHECK(g.apply(canonical_class(n)) == canonical_class(n));
  const auto f = CohClass::h(n) - CohClass::e(n, 1);
  CHECK(g.apply(f) == f);
  CHECK(g.apply(CohClass::e(n, 2)) == f - CohClass::e(n, 2));
  CHECK(isometry_from_fiber_action(n, fiber_action(g, ConicBundleModel::standard(n))) == g);
  CHECK_THROWS_AS(swap_isometry(n, {2}), DomainError);
}

TEST_CASE("minimality") {
  const int n = 5;
  const auto m = ConicBundleModel::standard(n);
  CHECK_FALSE(is_minimal_bundle({Isometry::identity(n)}, m));
  CHECK(is_minimal_bundle({Isometry::identity(n), swap_isometry(n, fibers(2, n))}, m));
  CHECK_FALSE(is_minimal_bundle({Isometry::identity(n), swap_isometry(n, {2, 3})}, m));
}

TEST_CASE("sigma partitions") {
  const int n4 = 4;
  // |Sigma_i| = 1, 1, 1
  std::array<FiberAction, 3> t4{fiber_action(swap_isometry(n4, {3, 4}), ConicBundleModel::standard(n4)),
                                fiber_action(swap_isometry(n4, {2, 4}), ConicBundleModel::standard(n4)),
                                fiber_action(swap_isometry(n4, {2, 3}), ConicBundleModel::standard(n4))};
  const auto p4 = sigma_partition(t4, n4);
  CHECK(p4.parity_ok);
  CHECK(p4.sigma[0] == std::vector<int>{2});

  const int n5 = 5;
  const auto m5 = ConicBundleModel::standard(n5);
  // |Sigma_i| = 2, 2, 0
  std::array<FiberAction, 3> t5{fiber_action(swap_isometry(n5, {4, 5}), m5),
                                fiber_action(swap_isometry(n5, {2, 3}), m5),
                                fiber_action(swap_isometry(n5, {2, 3, 4, 5}), m5)};
  const auto p5 = sigma_partition(t5, n5);
  CHECK(p5.parity_ok);
  CHECK(p5.sigma[2].empty());

  // two involutions that both leave fiber 2 alone
  std::array<FiberAction, 3> bad{fiber_action(swap_isometry(n5, {4, 5}), m5),
                                 fiber_action(swap_isometry(n5, {3, 4}), m5),
                                 fiber_action(swap_isometry(n5, {3, 5}), m5)};
  CHECK_THROWS_AS(sigma_partition(bad, n5), DomainError);
}

TEST_CASE("decompose") {
  const int n = 7;
  const auto m = ConicBundleModel::standard(n);
  const auto z2 = generate_group({swap_isometry(n, fibers(2, n))});
  const auto d = decompose(z2, m, 1);
  CHECK(d.tag == ConicCase::Case2Z2);
  CHECK(d.q_structure == "Z2");
  const auto d3 = decompose(z2, m, 3);
  CHECK(d3.tag == ConicCase::Case1Dihedral);
  CHECK(d3.q_structure == "D6");

  const auto klein = generate_group({swap_isometry(n, {2, 3, 4, 5}), swap_isometry(n, {4, 5, 6, 7})});
  const auto dk = decompose(klein, m, 1);
  CHECK(dk.tag == ConicCase::Case2Klein);
  REQUIRE(dk.sigma.has_value());
  CHECK(dk.sigma->parity_ok);
  // Klein image with nontrivial G0 is not allowed
  CHECK(decompose(klein, m, 2).tag == ConicCase::Violation);
  CHECK_FALSE(decompose(klein, m, 2).certificate.empty());

  CHECK(decompose(generate_group({swap_isometry(n, {2, 3})}), m, 1).tag == ConicCase::NotMinimal);
  CHECK_THROWS_AS(decompose(generate_group({Isometry::identity(3)}), ConicBundleModel::standard(3), 1),
                  DomainError);
}

TEST_CASE("Q is independent of the adapted basis") {
  const int n = 5;
  const auto m = ConicBundleModel::standard(n);
  const auto g = generate_group({swap_isometry(n, fibers(2, n)), Isometry::permutation(n, {1, 3, 2, 4, 5})});
  CHECK(q_invariance_check(m, m, g));
  CHECK(q_invariance_check(m, ConicBundleModel::relabeled(n, {{2, true}, {3, false}, {4, false}, {5, false}}), g));
  CHECK(q_invariance_check(m, ConicBundleModel::relabeled(n, {{3, false}, {2, false}, {5, true}, {4, false}}), g));
  CHECK(q_image(g, m).size() == 2);
}

TEST_CASE("section identity") {
  const int n = 5;
  const auto e = section_class(n, 0, {0, 0, 0, 0});
  CHECK(e == CohClass::e(n, 1));
  CHECK_THROWS_AS(section_identity(e, e), DomainError);
  const auto ep = section_class(n, 1, {1, 1, 1, 1});
  const auto id = section_identity(e, ep);
  CHECK(id.r == 0);
  CHECK(id.m == 1);
  CHECK(id.holds);
  // compare against a direct Gram computation
  for (int c = -2; c <= 2; ++c)
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<int> co(4);
      for (int t = 0; t < 4; ++t)
        co[t] = (mask >> t & 1u) ? -1 : 0;
      const auto s = section_class(n, c, co);
      if (s == e)
        continue;
      const auto r = section_identity(e, s);
      CHECK(r.dot == oracle::dot(e.coords(), s.coords()));
      CHECK(r.m_prime == -oracle::dot(s.coords(), s.coords()));
      CHECK(r.holds);
    }
  CHECK_THROWS_AS(section_identity(section_class(n, 0, {1, 0, 0, 0}), section_class(n, 0, {0, -1, 0, 0})),
                  DomainError);
}

TEST_CASE("swap-closed sections") {
  CHECK(max_swap_closed_section(6) == 1);
  for (int n : {6, 8, 10}) {
    CAPTURE(n);
    CHECK(max_swap_closed_section(n) == oracle::swap_section_bound(n));
    CHECK(max_swap_closed_section(n) <= (n - 4) / 2);
  }
  CHECK_THROWS_AS(max_swap_closed_section(7), DomainError);
}

TEST_CASE("vertical decompositions") {
  const int n = 6;
  const CohClass f = CohClass::h(n) - CohClass::e(n, 1);
  CHECK(vertical_decompositions(CohClass{2, -2, -1, -1, -1, -1, -1}).empty());
  CHECK(oracle::vertical_count({2, -2, -1, -1, -1, -1, -1}) == 0);
  const auto ff = vertical_decompositions(f);
  CHECK(ff.size() == 6);
  CHECK(ff.size() == oracle::vertical_count(f.coords()));
  CHECK(vertical_decompositions(CohClass::zero(n)).size() == 1);
  CHECK(vertical_decompositions(CohClass::zero(n))[0].empty());
}

TEST_CASE("invariant exceptional class at N = 6") {
  const auto c = invariant_exceptional_n6();
  CHECK(square(c) == -1);
  CHECK(pairing(canonical_class(6), c) == -1);
  const auto targets = multiplicity_one_targets();
  CHECK_FALSE(targets.empty());
  std::size_t checked = 0;
  for (const auto &t : targets) {
    CHECK(vertical_decompositions(t).empty());
    if (t.degree() <= 1) {
      CHECK(oracle::vertical_count(t.coords()) == 0);
      ++checked;
    }
  }
  CHECK(checked > 0);
}
