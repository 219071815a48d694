#include "rgsurf/gconic.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rgsurf/diophantine.hpp"

namespace rgs {

ConicBundleModel ConicBundleModel::standard(int n) {
  std::vector<std::pair<int, bool>> t;
  for (int j = 2; j <= n; ++j)
    t.push_back({j, false});
  return relabeled(n, t);
}

ConicBundleModel ConicBundleModel::relabeled(int n, const std::vector<std::pair<int, bool>> &targets) {
  if (n < 3)
    throw DomainError("conic bundle model needs N >= 3");
  if (targets.size() != static_cast<std::size_t>(n - 1))
    throw DomainError("relabelling must list one target per singular fiber");
  ConicBundleModel m;
  m.n_ = n;
  std::vector<bool> seen(n + 1, false);
  const CohClass f = m.fiber();
  for (auto [k, swapped] : targets) {
    if (k < 2 || k > n || seen[k])
      throw DomainError("relabelling is not a bijection onto fibers 2..N");
    seen[k] = true;
    m.comps_.push_back(swapped ? f - CohClass::e(n, k) : CohClass::e(n, k));
  }
  return m;
}

CohClass ConicBundleModel::fiber() const { return CohClass::h(n_) - CohClass::e(n_, 1); }

bool FiberAction::trivial_on_base() const {
  for (std::size_t t = 0; t < pi.size(); ++t)
    if (pi[t] != static_cast<int>(t) + 2)
      return false;
  return true;
}

bool FiberAction::is_identity() const { return trivial_on_base() && swap_count() == 0; }

int FiberAction::swap_count() const { return static_cast<int>(std::count(eps.begin(), eps.end(), -1)); }

bool FiberAction::full_swap() const { return trivial_on_base() && swap_count() == static_cast<int>(eps.size()); }

FiberAction fiber_action(const Isometry &g, const ConicBundleModel &model) {
  const int n = model.n();
  if (g.n() != n)
    throw DomainError("isometry dimension does not match the model");
  const CohClass f = model.fiber();
  if (g.apply(f) != f)
    throw DomainError("element does not fix the fiber class " + f.str());
  FiberAction a;
  a.pi.assign(n - 1, 0);
  a.eps.assign(n - 1, 0);
  std::vector<bool> hit(n + 1, false);
  for (int j = 2; j <= n; ++j) {
    const CohClass img = g.apply(model.comp(j));
    for (int k = 2; k <= n && !a.pi[j - 2]; ++k) {
      if (img == model.comp(k))
        a.pi[j - 2] = k, a.eps[j - 2] = 1;
      else if (img == model.other(k))
        a.pi[j - 2] = k, a.eps[j - 2] = -1;
    }
    if (!a.pi[j - 2])
      throw DomainError("element does not permute the singular fibers: " + model.comp(j).str() + " -> " +
                        img.str());
    if (hit[a.pi[j - 2]])
      throw DomainError("element maps two fibers to one");
    hit[a.pi[j - 2]] = true;
  }
  return a;
}

FiberAction compose(const FiberAction &g, const FiberAction &h) {
  FiberAction r;
  r.pi.resize(h.pi.size());
  r.eps.resize(h.eps.size());
  for (std::size_t t = 0; t < h.pi.size(); ++t) {
    const int mid = h.pi[t];
    r.pi[t] = g.pi[mid - 2];
    r.eps[t] = h.eps[t] * g.eps[mid - 2];
  }
  return r;
}

Isometry isometry_from_fiber_action(int n, const FiberAction &a) {
  if (a.pi.size() != static_cast<std::size_t>(n - 1) || a.eps.size() != a.pi.size())
    throw DomainError("fiber action length must be N-1");
  const int swaps = a.swap_count();
  if (swaps % 2 != 0)
    throw DomainError("an odd number of fiber swaps is not realised by a lattice isometry");
  const CohClass f = CohClass::h(n) - CohClass::e(n, 1);
  std::vector<CohClass> cols(n + 1);
  CohClass e1 = CohClass::e(n, 1) + (swaps / 2) * f;
  for (int j = 2; j <= n; ++j) {
    const int k = a.pi[j - 2];
    if (k < 2 || k > n)
      throw DomainError("fiber permutation out of range");
    if (a.eps[j - 2] == 1) {
      cols[j] = CohClass::e(n, k);
    } else if (a.eps[j - 2] == -1) {
      cols[j] = f - CohClass::e(n, k);
      e1 = e1 - CohClass::e(n, k);
    } else {
      throw DomainError("swap flags must be +1 or -1");
    }
  }
  cols[1] = e1;
  cols[0] = f + e1;
  Isometry g = Isometry::identity(n);
  for (int c = 0; c <= n; ++c)
    for (int r = 0; r <= n; ++r)
      g(r, c) = cols[c][r];
  if (auto w = pairing_defect(g))
    throw TheoremViolation("fiber action matrix is not an isometry: " + w->str());
  return g;
}

Isometry swap_isometry(int n, const std::vector<int> &fibers) {
  FiberAction a;
  for (int j = 2; j <= n; ++j) {
    a.pi.push_back(j);
    a.eps.push_back(std::count(fibers.begin(), fibers.end(), j) ? -1 : 1);
  }
  return isometry_from_fiber_action(n, a);
}

bool is_minimal_bundle(const std::vector<Isometry> &elements, const ConicBundleModel &model) {
  const int n = model.n();
  std::vector<bool> covered(n + 1, false);
  for (const auto &g : elements) {
    const auto a = fiber_action(g, model);
    for (int j = 2; j <= n; ++j)
      if (a.pi[j - 2] == j && a.eps[j - 2] == -1)
        covered[j] = true;
  }
  for (int j = 2; j <= n; ++j)
    if (!covered[j])
      return false;
  return true;
}

SigmaPartition sigma_partition(const std::array<FiberAction, 3> &taus, int n) {
  for (const auto &t : taus) {
    if (t.pi.size() != static_cast<std::size_t>(n - 1))
      throw DomainError("fiber action length must be N-1");
    if (!t.trivial_on_base() || t.is_identity())
      throw DomainError("Klein four elements must be nontrivial and act trivially on the base");
  }
  if (taus[0] == taus[1] || taus[1] == taus[2] || taus[0] == taus[2] || compose(taus[0], taus[1]) != taus[2])
    throw DomainError("the three involutions do not form a Klein four group");
  SigmaPartition p;
  std::vector<int> owner(n + 1, -1);
  for (int i = 0; i < 3; ++i)
    for (int j = 2; j <= n; ++j)
      if (taus[i].eps[j - 2] == 1) {
        if (owner[j] >= 0)
          throw DomainError("fiber " + std::to_string(j) + " is left invariant by two involutions");
        owner[j] = i;
        p.sigma[i].push_back(j);
      }
  for (int j = 2; j <= n; ++j)
    if (owner[j] < 0)
      throw DomainError("fiber " + std::to_string(j) + " lies in no part of the partition");
  p.parity_ok = true;
  for (const auto &s : p.sigma)
    p.parity_ok = p.parity_ok && (static_cast<int>(s.size()) - (n - 1)) % 2 == 0;
  return p;
}

const char *to_string(ConicCase c) {
  switch (c) {
  case ConicCase::Case1Dihedral:
    return "case1_dihedral";
  case ConicCase::Case1Cyclic:
    return "case1_cyclic";
  case ConicCase::Case2Z2:
    return "case2_z2";
  case ConicCase::Case2Klein:
    return "case2_klein";
  case ConicCase::NotMinimal:
    return "not_minimal";
  case ConicCase::Violation:
    return "violation";
  }
  return "?";
}

std::vector<std::size_t> q_image(const FiniteIsometryGroup &g, const ConicBundleModel &model) {
  std::vector<std::size_t> q;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (fiber_action(g.element(i), model).trivial_on_base())
      q.push_back(i);
  return q;
}

GroupDecomposition decompose(const FiniteIsometryGroup &g, const ConicBundleModel &model, int g0_order) {
  const int n = model.n();
  if (n < 4)
    throw DomainError("classification needs at least three singular fibers (N >= 4)");
  if (g0_order < 1)
    throw DomainError("|G0| must be at least 1");
  if (g.n() != n)
    throw DomainError("group dimension does not match the model");
  GroupDecomposition d;
  d.order = g.order();
  d.g0_order = g0_order;
  std::vector<Isometry> elems;
  std::vector<FiberAction> qbar;
  for (std::size_t i = 0; i < g.order(); ++i) {
    elems.push_back(g.element(i));
    auto a = fiber_action(elems.back(), model);
    if (a.trivial_on_base())
      qbar.push_back(std::move(a));
  }
  d.qbar_order = qbar.size();
  d.p_order = d.order / d.qbar_order;
  for (const auto &a : qbar)
    if (!a.is_identity())
      d.fixed_fiber_counts.push_back(n - 1 - a.swap_count());
  d.minimal = is_minimal_bundle(elems, model);
  if (!d.minimal) {
    d.tag = ConicCase::NotMinimal;
    d.q_structure = "n/a";
    return d;
  }
  auto violate = [&](std::string why) {
    d.tag = ConicCase::Violation;
    d.certificate = std::move(why);
    return d;
  };
  const int m = g0_order;
  if (m > 1) {
    if (n % 2 == 0)
      return violate("nontrivial G0 with N even");
    for (const auto &a : qbar)
      if (!a.is_identity() && !a.full_swap())
        return violate("element of Q outside G0 that fixes a component of some singular fiber");
    if (d.qbar_order == 2) {
      d.tag = ConicCase::Case1Dihedral;
      d.q_structure = "D" + std::to_string(2 * m);
      return d;
    }
    if (d.qbar_order == 1) {
      if (m % 2 != 0)
        return violate("Q = G0 requires |G0| even, got " + std::to_string(m));
      d.tag = ConicCase::Case1Cyclic;
      d.q_structure = "Z" + std::to_string(m);
      return d;
    }
    return violate("image of Q has order " + std::to_string(d.qbar_order) + " > 2 with nontrivial G0");
  }
  if (d.qbar_order == 2) {
    d.tag = ConicCase::Case2Z2;
    d.q_structure = "Z2";
    return d;
  }
  if (d.qbar_order == 4) {
    std::array<FiberAction, 3> taus;
    int t = 0;
    for (const auto &a : qbar)
      if (!a.is_identity())
        taus[t++] = a;
    try {
      d.sigma = sigma_partition(taus, n);
    } catch (const DomainError &e) {
      return violate(std::string("Klein four image without a valid partition: ") + e.what());
    }
    if (!d.sigma->parity_ok)
      return violate("partition sizes not congruent to N-1 mod 2");
    d.tag = ConicCase::Case2Klein;
    d.q_structure = "Z2xZ2";
    return d;
  }
  if (d.qbar_order == 1)
    return violate("trivial G0 but Q contains no involution");
  return violate("trivial G0 and Q of order " + std::to_string(d.qbar_order));
}

bool q_invariance_check(const ConicBundleModel &model, const ConicBundleModel &other, const FiniteIsometryGroup &g) {
  if (model.n() != other.n())
    throw DomainError("models of different N");
  // the adapted basis must pair fibers the same way
  for (int j = 2; j <= other.n(); ++j) {
    bool found = false;
    for (int k = 2; k <= model.n() && !found; ++k)
      found = other.comp(j) == model.comp(k) || other.comp(j) == model.other(k);
    if (!found)
      throw DomainError("second model is not a relabelling of the first");
  }
  return q_image(g, model) == q_image(g, other);
}

CohClass section_class(int n, std::int64_t c, const std::vector<int> &coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(n - 1))
    throw DomainError("section needs N-1 fiber coefficients");
  std::vector<std::int64_t> v{c, checked::sub(1, c)};
  v.insert(v.end(), coeffs.begin(), coeffs.end());
  return CohClass(std::move(v));
}

namespace {

// +1 / -1 for the sign convention of the fiber coefficients, 0 if all zero
int section_convention(const CohClass &e) {
  if (e.n() < 2 || e[1] != 1 - e[0])
    throw DomainError("class " + e.str() + " is not a section E_1 + cF + ...");
  int sign = 0;
  for (int t = 2; t <= e.n(); ++t) {
    if (e[t] == 0)
      continue;
    if (e[t] != 1 && e[t] != -1)
      throw DomainError("section coefficient outside {0, 1} in " + e.str());
    if (sign && sign != e[t])
      throw DomainError("mixed section coefficient signs in " + e.str());
    sign = static_cast<int>(e[t]);
  }
  return sign;
}

} // namespace

SectionIdentity section_identity(const CohClass &e, const CohClass &e_prime) {
  if (e.n() != e_prime.n())
    throw DomainError("sections of different N");
  if (e == e_prime)
    throw DomainError("section identity needs two distinct sections");
  const int s1 = section_convention(e), s2 = section_convention(e_prime);
  if (s1 && s2 && s1 != s2)
    throw DomainError("sections written in different sign conventions");
  SectionIdentity out;
  for (int t = 2; t <= e.n(); ++t)
    out.r += e[t] == e_prime[t];
  out.m = -square(e);
  out.m_prime = -square(e_prime);
  out.dot = pairing(e, e_prime);
  out.holds = e.n() - 1 == out.r + out.m + out.m_prime + 2 * out.dot;
  return out;
}

int max_swap_closed_section(int n) {
  if (n < 6 || n % 2 != 0)
    throw DomainError("section bound is stated for even N >= 6");
  const int len = n - 1;
  if (len > 20)
    throw DomainError("swap search supports N <= 21");
  const unsigned full = (1u << len) - 1;
  auto fibers_of = [&](unsigned mask) {
    std::vector<int> f;
    for (int b = 0; b < len; ++b)
      if (mask >> b & 1u)
        f.push_back(b + 2);
    return f;
  };
  for (int m = len / 2; m >= -1; --m) {
    // a concrete section of square -m: E_1 + cF - d_2 E_2
    const bool odd = (m % 2 + 2) % 2 == 1;
    std::vector<int> coeffs(len, 0);
    if (!odd)
      coeffs[0] = -1;
    const CohClass s = section_class(n, odd ? (1 - m) / 2 : (2 - m) / 2, coeffs);
    if (-square(s) != m)
      throw TheoremViolation("section construction missed the target square");
    std::vector<char> admissible(full + 1, 0);
    std::vector<unsigned> cands;
    for (unsigned mask = 1; mask <= full; ++mask) {
      if (__builtin_popcount(mask) % 2)
        continue;
      const CohClass img = swap_isometry(n, fibers_of(mask)).apply(s);
      const auto id = section_identity(s, img);
      if (!id.holds)
        throw TheoremViolation("section identity failed for a swap image");
      if (id.dot >= 0) {
        admissible[mask] = 1;
        cands.push_back(mask);
      }
    }
    // an F_2-span of admissible swap sets, all nonzero members admissible,
    // whose union covers every fiber
    std::function<bool(std::vector<unsigned> &, unsigned, std::size_t)> dfs =
        [&](std::vector<unsigned> &span, unsigned covered, std::size_t from) -> bool {
      if (covered == full)
        return true;
      for (std::size_t c = from; c < cands.size(); ++c) {
        const unsigned t = cands[c];
        if ((t | covered) == covered)
          continue;
        bool ok = true;
        for (unsigned v : span)
          if (!admissible[v ^ t]) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        const std::size_t old = span.size();
        for (std::size_t i = 0; i < old; ++i)
          span.push_back(span[i] ^ t);
        span.push_back(t);
        if (dfs(span, covered | t, c + 1))
          return true;
        span.resize(old);
      }
      return false;
    };
    std::vector<unsigned> span;
    if (dfs(span, 0, 0))
      return m;
  }
  throw TheoremViolation("no swap-closed section configuration found");
}

std::vector<std::vector<CohClass>> vertical_decompositions(const CohClass &target) {
  const int n = target.n();
  if (n < 2)
    throw DomainError("vertical decompositions need N >= 2");
  const std::int64_t alpha = target[0];
  std::vector<std::vector<CohClass>> out;
  if (alpha < 0 || target[1] != -alpha)
    return out;
  const CohClass f = CohClass::h(n) - CohClass::e(n, 1);
  std::vector<std::int64_t> z(n + 1, 0);
  std::function<void(int, std::int64_t)> rec = [&](int j, std::int64_t used) {
    if (j > n) {
      std::vector<CohClass> parts;
      for (int t = 2; t <= n; ++t) {
        for (std::int64_t y = 0; y < target[t] + z[t]; ++y)
          parts.push_back(CohClass::e(n, t));
        for (std::int64_t k = 0; k < z[t]; ++k)
          parts.push_back(f - CohClass::e(n, t));
      }
      for (std::int64_t w = 0; w < alpha - used; ++w)
        parts.push_back(f);
      std::sort(parts.begin(), parts.end());
      out.push_back(std::move(parts));
      return;
    }
    for (std::int64_t v = std::max<std::int64_t>(0, -target[j]); used + v <= alpha; ++v) {
      z[j] = v;
      rec(j + 1, used + v);
    }
    z[j] = 0;
  };
  rec(2, 0);
  std::sort(out.begin(), out.end());
  return out;
}

CohClass invariant_exceptional_n6() {
  const int n = 6;
  const CohClass k = canonical_class(n), f = CohClass::h(n) - CohClass::e(n, 1);
  const CohClass c{2, 0, -1, -1, -1, -1, -1};
  if (square(c) != -1)
    throw TheoremViolation("C^2 != -1");
  if (pairing(k, c) != -1)
    throw TheoremViolation("K.C != -1");
  if (-k - f != c)
    throw TheoremViolation("C is not -K - F");
  return c;
}

std::vector<CohClass> multiplicity_one_targets(std::int64_t max_degree) {
  const int n = 6;
  const CohClass base = invariant_exceptional_n6() - CohClass::e(n, 1);
  std::vector<CohClass> out;
  for (std::int64_t a = 1; a <= max_degree; ++a) {
    // E'^2 = 2a - 1 - sum e_j^2 >= -1
    const std::int64_t budget = 2 * a, r = isqrt(budget);
    std::vector<std::int64_t> e(n - 1, -r);
    for (;;) {
      std::int64_t sq = 0;
      for (auto v : e)
        sq += v * v;
      if (sq <= budget) {
        std::vector<std::int64_t> c{a, 1 - a};
        c.insert(c.end(), e.begin(), e.end());
        out.push_back(base - CohClass(std::move(c)));
      }
      std::size_t p = 0;
      while (p < e.size() && e[p] == r)
        e[p++] = -r;
      if (p == e.size())
        break;
      ++e[p];
    }
  }
  return out;
}

} // namespace rgs
