#include "rgsurf/exceptional.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>

#include "rgsurf/diophantine.hpp"

namespace rgs {

bool is_exceptional(const CohClass &e) {
  return square(e) == -1 && pairing(canonical_class(e.n()), e) == -1;
}

namespace {

// Degrees allowed by (3a-1)^2 <= N(a^2+1), i.e. (9-N)a^2 - 6a + 1 - N <= 0.
std::pair<std::int64_t, std::int64_t> degree_window(int n) {
  const std::int64_t A = 9 - n, B = -6, C = 1 - n;
  std::int64_t lo = 0, hi = 0;
  // integer scan outward from a = 0, where the form is 1 - N <= 0
  auto ok = [&](std::int64_t a) { return A * a * a + B * a + C <= 0; };
  while (ok(hi + 1))
    ++hi;
  while (ok(lo - 1))
    --lo;
  return {lo, hi};
}

std::mutex cache_mu;
std::map<int, ExceptionalSet> cache;

} // namespace

ExceptionalSet enumerate_exceptional(int n, std::optional<std::int64_t> max_degree) {
  if (n < 1)
    throw DomainError("enumeration needs N >= 1");
  if (n >= 9 && !max_degree)
    throw DomainError("N >= 9 has infinitely many exceptional classes; a degree bound is required");
  if (max_degree && *max_degree < 0)
    throw DomainError("degree bound must be nonnegative");

  const bool full = n <= 8 && !max_degree;
  if (full) {
    std::lock_guard lk(cache_mu);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }

  std::int64_t lo = 0, hi = 0;
  if (n <= 8) {
    std::tie(lo, hi) = degree_window(n);
    if (max_degree)
      hi = std::min(hi, *max_degree);
  } else {
    hi = *max_degree;
  }
  ExceptionalSet out;
  out.n = n;
  out.max_degree = hi;
  out.complete = n <= 8 && (!max_degree || *max_degree >= degree_window(n).second);
  // Negative degrees lie in the window for some N <= 8 but have no solutions.
  // For N >= 9 the search starts at 0 (at N = 10 the canonical class itself
  // solves both equations with degree -3).
  for (std::int64_t a = (n <= 8 ? lo : 0); a <= hi; ++a) {
    const std::int64_t s = checked::sub(checked::mul(3, a), 1);
    const std::int64_t q = checked::add(checked::mul(a, a), 1);
    for_each_sum_squares(n, s, q, [&](std::span<const std::int64_t> b) {
      out.classes.push_back(CohClass::from_degree_form(a, b));
    });
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const CohClass &x, const CohClass &y) {
    if (x.degree() != y.degree())
      return x.degree() < y.degree();
    return x < y;
  });
  if (full) {
    std::lock_guard lk(cache_mu);
    cache.emplace(n, out);
  }
  return out;
}

std::vector<CohClass> positive_exceptional(const ExceptionalSet &set, const SymplecticClass &w) {
  std::vector<CohClass> out;
  for (const auto &e : set.classes)
    if (area(w, e) > 0)
      out.push_back(e);
  return out;
}

CohClass cremona_reflect(const CohClass &x, int i, int j, int k) {
  const auto h = h_ijk(x.n(), i, j, k);
  return x + pairing(x, h) * h;
}

Isometry cremona_matrix(int n, int i, int j, int k) { return reflection(h_ijk(n, i, j, k)); }

namespace {

// Indices of the three largest b_s (b_s = -c_s), ties by smallest index,
// returned ascending.
std::array<int, 3> top_three(const CohClass &e) {
  std::vector<int> idx(e.n());
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int p, int q) { return e.b(p) > e.b(q); });
  std::array<int, 3> t{idx[0], idx[1], idx[2]};
  std::sort(t.begin(), t.end());
  return t;
}

} // namespace

ReductionTrace reduce_exceptional(const CohClass &e) {
  if (!is_exceptional(e))
    throw DomainError("class " + e.str() + " is not exceptional");
  if (e.degree() < 0)
    throw DomainError("exceptional class with negative degree cannot be reduced");
  ReductionTrace tr;
  CohClass cur = e;
  if (cur.degree() > 0 && cur.n() < 3)
    throw DomainError("reduction of positive-degree classes needs N >= 3");
  while (cur.degree() > 0) {
    auto [i, j, k] = top_three(cur);
    CohClass next = cremona_reflect(cur, i, j, k);
    if (next.degree() >= cur.degree())
      throw TheoremViolation("Cremona step did not lower the degree of " + cur.str());
    tr.steps.push_back({i, j, k, cur, next});
    cur = next;
  }
  // degree 0 exceptional: sum b = -1, sum b^2 = 1, so exactly one c_l = 1
  for (int l = 1; l <= cur.n(); ++l)
    if (cur[l] == 1)
      tr.final_index = l;
  if (tr.final_index == 0 || cur != CohClass::e(cur.n(), tr.final_index))
    throw TheoremViolation("reduction of " + e.str() + " ended at " + cur.str());
  return tr;
}

SymplecticReduction reduce_symplectic(const SymplecticClass &w, int max_iters) {
  const int n = w.n();
  if (n < 3)
    throw DomainError("symplectic reduction needs N >= 3");
  if (square(w) <= 0)
    throw DomainError("symplectic reduction needs a class of positive square");
  SymplecticReduction r{w, Isometry::identity(n), 0, true};
  for (int it = 0;; ++it) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
      return r.reduced.lambda(p) > r.reduced.lambda(q);
    });
    // E_{order[t]} goes to slot t+1
    std::vector<int> perm(n);
    for (int t = 0; t < n; ++t)
      perm[order[t] - 1] = t + 1;
    const Isometry p = Isometry::permutation(n, perm);
    r.reduced = p.apply(r.reduced);
    r.map = p * r.map;
    const Rational d = r.reduced.nu() - r.reduced.lambda(1) - r.reduced.lambda(2) - r.reduced.lambda(3);
    if (d >= 0)
      break;
    if (it >= max_iters)
      throw LimitExceeded("symplectic reduction exceeded " + std::to_string(max_iters) + " Cremona steps");
    const Isometry c = cremona_matrix(n, 1, 2, 3);
    r.reduced = c.apply(r.reduced);
    r.map = c * r.map;
    ++r.cremona_steps;
  }
  if (r.reduced.nu() <= 0)
    r.symplectic = false;
  for (int i = 1; i <= n; ++i)
    if (r.reduced.lambda(i) <= 0)
      r.symplectic = false;
  return r;
}

const char *to_string(StructureKind k) {
  switch (k) {
  case StructureKind::Monotone:
    return "Monotone";
  case StructureKind::SmallFiberShape:
    return "SmallFiberShape";
  case StructureKind::Other:
    return "Other";
  }
  return "?";
}

StructureResult structure_test(const SymplecticClass &w, bool basis_reduced) {
  StructureResult res;
  if (basis_reduced) {
    if (!is_reduced_class(w))
      throw DomainError("class is not reduced");
    res.reduced = w;
  } else {
    auto red = reduce_symplectic(w);
    if (!red.symplectic || !is_reduced_class(red.reduced))
      throw DomainError("class does not reduce to a symplectic reduced class");
    res.reduced = red.reduced;
  }
  const auto &v = res.reduced;
  const int n = v.n();
  if (is_monotone(v)) {
    res.kind = StructureKind::Monotone;
    return res;
  }
  bool tail_equal = true;
  for (int i = 3; i <= n; ++i)
    tail_equal = tail_equal && v.lambda(i) == v.lambda(2);
  if (v.lambda(1) > v.lambda(2) && tail_equal && v.nu() - v.lambda(1) == 2 * v.lambda(2)) {
    res.kind = StructureKind::SmallFiberShape;
    for (int j = 2; j <= n; ++j) {
      res.minimal_candidates.push_back(CohClass::e(n, j));
      res.minimal_candidates.push_back(h_ij(n, 1, j));
    }
    return res;
  }
  res.kind = StructureKind::Other;
  return res;
}

bool is_reduced_basis_by_areas(const SymplecticClass &w) {
  const int n = w.n();
  if (n > 8)
    throw DomainError("area-minimal basis test needs the complete enumeration, N <= 8");
  const auto pos = positive_exceptional(enumerate_exceptional(n), w);
  for (int i = n; i >= 1; --i) {
    if (w.lambda(i) <= 0)
      return false;
    for (const auto &e : pos) {
      bool orth = true;
      for (int j = i + 1; j <= n && orth; ++j)
        orth = e[j] == 0;
      if (orth && area(w, e) < w.lambda(i))
        return false;
    }
  }
  return true;
}

} // namespace rgs
