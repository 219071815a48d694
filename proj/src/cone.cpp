#include "rgsurf/cone.hpp"

#include <algorithm>

#include "rgsurf/exceptional.hpp"

namespace rgs {

const char *to_string(ConeVerdict v) {
  switch (v) {
  case ConeVerdict::Full:
    return "Full";
  case ConeVerdict::PartialPositive:
    return "PartialPositive";
  case ConeVerdict::Outside:
    return "Outside";
  }
  return "?";
}

ConeCheck is_in_cone(const SymplecticClass &w, std::int64_t degree_bound) {
  const int n = w.n();
  ConeCheck c;
  // the area scan runs even for w^2 <= 0 so that a witness is reported
  const auto set = n <= 8 ? enumerate_exceptional(n) : enumerate_exceptional(n, degree_bound);
  c.degree_bound = set.max_degree;
  for (const auto &e : set.classes) {
    ++c.classes_checked;
    if (area(w, e) <= 0) {
      c.verdict = ConeVerdict::Outside;
      c.witness = e;
      return c;
    }
  }
  if (square(w) <= 0) {
    c.verdict = ConeVerdict::Outside;
    return c;
  }
  c.verdict = set.complete ? ConeVerdict::Full : ConeVerdict::PartialPositive;
  return c;
}

namespace {

// w = x K0 + y F, exactly; throws when w is outside the span
std::pair<Rational, Rational> span_coords(const SymplecticClass &w, const CohClass &k0, const CohClass &f) {
  if (w.n() != k0.n() || w.n() != f.n())
    throw DomainError("dimension mismatch");
  if (square(f) != 0 || pairing(k0, f) != -2)
    throw DomainError("F must satisfy F^2 = 0 and K0.F = -2");
  const Rational x = pairing(w, f) / Rational(-2);
  const Rational k0k0 = square(k0);
  // w.K0 = x K0^2 - 2 y
  const Rational y = (x * k0k0 - pairing(w, k0)) / 2;
  for (int i = 0; i <= w.n(); ++i)
    if (w.coords()[i] != x * static_cast<long>(k0[i]) + y * static_cast<long>(f[i]))
      throw DomainError("class is not in the span of K0 and F");
  return {x, y};
}

} // namespace

CanonicalSign canonical_sign(const SymplecticClass &w, const CohClass &k0) {
  const int n = w.n();
  return canonical_sign(w, k0, CohClass::h(n) - CohClass::e(n, 1));
}

CanonicalSign canonical_sign(const SymplecticClass &w, const CohClass &k0, const CohClass &f) {
  if (square(w) <= 0)
    throw DomainError("canonical sign needs w^2 > 0");
  auto [x, y] = span_coords(w, k0, f);
  if (x == 0)
    throw DomainError("class is a multiple of F");
  CanonicalSign s;
  s.sign = x < 0 ? 1 : -1;
  // s w = s x K0 + s y F = |x| (-K0 + (s y / |x|) F)
  s.b = s.sign * y / abs(x);
  if (w.n() >= 3) {
    const SymplecticClass v = Rational(s.sign) * w;
    std::vector<Rational> lam;
    for (int i = 1; i <= v.n(); ++i)
      lam.push_back(v.lambda(i));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    s.reduced = is_reduced_class(SymplecticClass(v.nu(), lam));
  }
  return s;
}

std::vector<FiberPair> fiber_pairs(int n) {
  if (n < 2)
    throw DomainError("fiber pairs need N >= 2");
  // F' = alpha K + beta F: F'^2 = alpha (alpha K^2 - 4 beta) = 0 and
  // K.F' = alpha K^2 - 2 beta = -2 force beta = -1, alpha K^2 = -4.
  const std::int64_t k2 = 9 - n;
  std::vector<FiberPair> out;
  if (k2 == 0 || 4 % k2 != 0)
    return out;
  const std::int64_t alpha = -4 / k2;
  const std::int64_t a = -alpha;
  if (a <= 0) // F.F' = -2 alpha must be positive
    return out;
  const CohClass k = canonical_class(n), f = CohClass::h(n) - CohClass::e(n, 1);
  const CohClass fp = alpha * k - f;
  if (square(fp) != 0 || pairing(k, fp) != -2 || pairing(f, fp) != 2 * a)
    throw TheoremViolation("fiber pair solution failed verification");
  out.push_back({a, fp});
  return out;
}

std::vector<Obstruction> blowdown_obstruction(int n, std::int64_t a_min) {
  if (a_min > -1)
    throw DomainError("a_min must be <= -1");
  const std::int64_t k2 = 9 - n;
  std::vector<Obstruction> out;
  for (std::int64_t a = a_min; a <= -1; ++a) {
    const std::int64_t num = checked::mul(checked::mul(-a, a), k2);
    const std::int64_t den = 2 * a - 1;
    if (num % den == 0 && num / den > 0)
      out.push_back({a, num / den});
  }
  return out;
}

Rational delta(const SymplecticClass &w, const CohClass &f, const CohClass &k0) {
  const Rational wf = pairing(w, f);
  if (wf <= 0)
    throw DomainError("delta needs w.F > 0");
  const SymplecticClass v = Rational(2 / wf) * w;
  auto [x, y] = span_coords(v, k0, f);
  if (x != -1)
    throw TheoremViolation("rescaled class does not have K0 coefficient -1");
  return y;
}

ConeSlice slice_scan(int n, const CohClass &f, const CohClass &k0, std::vector<Rational> grid,
                     std::int64_t degree_bound) {
  if (f.n() != n || k0.n() != n)
    throw DomainError("dimension mismatch");
  if (square(f) != 0 || pairing(k0, f) != -2)
    throw DomainError("F must satisfy F^2 = 0 and K0.F = -2");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  ConeSlice s;
  s.full_mode = n <= 8;
  const SymplecticClass mk = -SymplecticClass::from_class(k0), fr = SymplecticClass::from_class(f);
  bool seen_inside = false;
  for (const auto &d : grid) {
    const bool in = is_in_cone(mk + d * fr, degree_bound).verdict != ConeVerdict::Outside;
    if (seen_inside && !in)
      throw TheoremViolation("cone membership is not monotone in delta at " + to_string(d));
    if (in && !seen_inside)
      s.first_inside = d;
    if (!in)
      s.last_outside = d;
    seen_inside = seen_inside || in;
    s.samples.push_back({d, in});
  }
  return s;
}

bool fiber_uniqueness_consistent(std::size_t candidate_count, int g0_order) {
  if (candidate_count < 1 || candidate_count > 2)
    return false;
  return g0_order <= 1 || candidate_count == 1;
}

} // namespace rgs
