#include "doctest.h"

#include "oracles/oracles.hpp"
#include "rgsurf/cone.hpp"
#include "rgsurf/exceptional.hpp"

using namespace rgs;

namespace {

CohClass fiber(int n) { return CohClass::h(n) - CohClass::e(n, 1); }

SymplecticClass combo(const Rational &a, const CohClass &x, const Rational &b, const CohClass &y) {
  return a * SymplecticClass::from_class(x) + b * SymplecticClass::from_class(y);
}

} // namespace

TEST_CASE("cone membership") {
  CHECK(is_in_cone(SymplecticClass(3, {1, 1, 1})).verdict == ConeVerdict::Full);
  const auto out = is_in_cone(SymplecticClass(1, {1, 1, 1}));
  CHECK(out.verdict == ConeVerdict::Outside);
  REQUIRE(out.witness.has_value());
  CHECK(area(SymplecticClass(1, {1, 1, 1}), *out.witness) <= 0);
  std::vector<Rational> ones(9, Rational(1));
  const auto nine = is_in_cone(SymplecticClass(4, ones), 5);
  CHECK(nine.verdict == ConeVerdict::PartialPositive);
  CHECK(nine.degree_bound == 5);
  CHECK(is_in_cone(SymplecticClass(1, {2, 0})).verdict == ConeVerdict::Outside);
}

TEST_CASE("canonical sign") {
  const int n = 5;
  const auto k = canonical_class(n);
  const auto plus = canonical_sign(combo(-1, k, 2, fiber(n)), k);
  CHECK(plus.sign == 1);
  CHECK(plus.b == 2);
  const auto minus = canonical_sign(combo(1, k, -2, fiber(n)), k);
  CHECK(minus.sign == -1);
  CHECK(minus.b == 2);
  for (int m = 3; m <= 8; ++m) {
    const auto mono = canonical_sign(-SymplecticClass::from_class(canonical_class(m)), canonical_class(m));
    CHECK(mono.sign == 1);
    CHECK(mono.b == 0);
    CHECK(mono.reduced);
  }
  CHECK_THROWS_AS(canonical_sign(SymplecticClass(3, {1, 1, 0, 0, 0}), k), DomainError);
}

TEST_CASE("fiber pairs against a scan") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    std::vector<std::int64_t> a;
    for (const auto &p : fiber_pairs(n)) {
      a.push_back(p.a);
      CHECK(square(p.f_prime) == 0);
      CHECK(pairing(canonical_class(n), p.f_prime) == -2);
      CHECK(pairing(fiber(n), p.f_prime) == 2 * p.a);
    }
    CHECK(a == oracle::fiber_pair_scan(n, 2000));
  }
}

TEST_CASE("blow-down obstruction against a scan") {
  CHECK(blowdown_obstruction(5, -50).empty());
  const auto six = blowdown_obstruction(6, -10000);
  REQUIRE(six.size() == 1);
  CHECK(six[0].a == -1);
  CHECK(six[0].m == 1);
  CHECK(blowdown_obstruction(9, -1000).empty());
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    std::vector<std::pair<std::int64_t, std::int64_t>> got;
    for (const auto &o : blowdown_obstruction(n, -3000))
      got.emplace_back(o.a, o.m);
    CHECK(got == oracle::obstruction_scan(n, -3000));
  }
}

TEST_CASE("delta") {
  const int n = 5;
  const auto k = canonical_class(n), f = fiber(n);
  CHECK(delta(-SymplecticClass::from_class(k), f, k) == 0);
  CHECK(delta(combo(-2, k, 6, f), f, k) == 3);
  CHECK(delta(combo(-1, k, 1, f), f, k) == 1);
  CHECK_THROWS_AS(delta(SymplecticClass(3, {2, 1, 1, 1, 1}), f, k), DomainError);
}

TEST_CASE("slice scans agree with direct membership") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto k = canonical_class(n), f = fiber(n);
    std::vector<Rational> grid;
    for (int i = 0; i < 50; ++i)
      grid.push_back(Rational(-2) + Rational(i, 10));
    const auto sl = slice_scan(n, f, k, grid);
    REQUIRE(sl.samples.size() == grid.size());
    const auto exc = oracle::exceptional(n);
    for (const auto &[d, inside] : sl.samples) {
      const auto w = combo(-1, k, d, f);
      bool member = square(w) > 0;
      for (const auto &e : exc)
        member = member && area(w, CohClass(e)) > 0;
      CHECK(inside == member);
    }
    for (const auto &e : exc)
      CHECK(oracle::dot(f.coords(), e) >= 0);
  }
  const auto five = slice_scan(5, fiber(5), canonical_class(5), {0, Rational(1, 2), 1, 2});
  for (const auto &s : five.samples)
    CHECK(s.second);
  const auto neg = slice_scan(3, fiber(3), canonical_class(3), {-2, -1, 0});
  CHECK_FALSE(neg.samples[0].second);
  CHECK(neg.samples[2].second);
  REQUIRE(neg.first_inside.has_value());
}

TEST_CASE("fiber uniqueness") {
  CHECK(fiber_uniqueness_consistent(1, 3));
  CHECK_FALSE(fiber_uniqueness_consistent(2, 3));
  CHECK(fiber_uniqueness_consistent(2, 1));
}
