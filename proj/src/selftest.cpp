#include "rgsurf/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "rgsurf/cone.hpp"
#include "rgsurf/exceptional.hpp"
#include "rgsurf/gconic.hpp"
#include "rgsurf/hexagon.hpp"
#include "rgsurf/weyl.hpp"

namespace rgs {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

template <class T> std::string join(const std::vector<T> &v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os.str();
}

CohClass pad(const CohClass &c, int n) {
  auto v = c.coords();
  v.resize(n + 1, 0);
  return CohClass(v);
}

Outcome c1_counts() {
  const auto t0 = Clock::now();
  const std::vector<std::size_t> want{3, 6, 10, 16, 27, 56, 240};
  std::vector<std::size_t> got;
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    const auto s = enumerate_exceptional(n);
    got.push_back(s.classes.size());
    for (const auto &c : s.classes)
      ok = ok && is_exceptional(c);
  }
  const double t = since(t0);
  return {ok && got == want && t < 10, "counts " + join(got) + " in " + std::to_string(t) + "s"};
}

Outcome c2_reduction() {
  const auto t0 = Clock::now();
  std::size_t traces = 0, bad = 0;
  for (int n = 1; n <= 8; ++n) {
    const int m = std::max(n, 3);
    for (const auto &c0 : enumerate_exceptional(n).classes) {
      const CohClass c = pad(c0, m);
      const auto tr = reduce_exceptional(c);
      ++traces;
      for (const auto &s : tr.steps)
        bad += s.after.degree() >= s.before.degree();
      for (int b = 0; b <= 2; ++b) {
        std::vector<Rational> lam(m, Rational(1));
        lam[0] = 1 + b;
        const SymplecticClass w(3 + b, lam);
        for (const auto &s : tr.steps)
          bad += area(w, s.after) > area(w, s.before);
      }
    }
  }
  const double t = since(t0);
  return {bad == 0 && t < 30, std::to_string(traces) + " traces, " + std::to_string(bad) + " violations"};
}

Outcome c3_weyl(int threads) {
  const std::vector<std::size_t> want{12, 120, 1920, 51840, 2903040};
  const std::vector<std::size_t> roots_want{8, 20, 40, 72, 126, 240};
  std::vector<std::size_t> got, roots;
  for (int n = 3; n <= 7; ++n)
    got.push_back(generate_group(simple_reflections(n), kDefaultGroupLimit, threads).order());
  for (int n = 3; n <= 8; ++n)
    roots.push_back(all_roots(n).size());
  const auto t0 = Clock::now();
  const BigInt e8 = group_order_via_chain(simple_reflections(8), enumerate_exceptional(8).classes);
  const double t = since(t0);
  return {got == want && roots == roots_want && e8 == 696729600 && t < 60,
          "orders " + join(got) + ", E8 " + e8.get_str() + " (" + std::to_string(t) + "s), roots " + join(roots)};
}

Outcome c4_trace_rank() {
  std::mt19937 rng(20240607);
  std::size_t bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    const auto simple = simple_reflections(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(simple.size()) - 1), len(1, 6), cnt(1, 3);
    std::vector<Isometry> gens;
    for (int g = cnt(rng); g > 0; --g) {
      Isometry w = Isometry::identity(n);
      for (int l = len(rng); l > 0; --l)
        w = simple[pick(rng)] * w;
      gens.push_back(w);
    }
    const auto grp = generate_group(gens);
    const auto lat = invariant_lattice(grp);
    const auto ts = trace_sum_condition(grp);
    if (static_cast<std::int64_t>(grp.order()) * lat.rank != character_sum(grp) || ts.holds != (lat.rank == 1))
      ++bad;
  }
  return {bad == 0, "200 subgroups, " + std::to_string(bad) + " failures"};
}

Outcome c5_sections() {
  std::size_t pairs = 0, bad = 0;
  for (int n = 5; n <= 9; ++n)
    for (int sign : {1, -1}) {
      std::vector<CohClass> secs;
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask)
        for (int c = -2; c <= 2; ++c) {
          std::vector<int> co(n - 1);
          for (int t = 0; t < n - 1; ++t)
            co[t] = (mask >> t & 1u) ? sign : 0;
          secs.push_back(section_class(n, c, co));
        }
      for (std::size_t i = 0; i < secs.size(); ++i)
        for (std::size_t j = 0; j < secs.size(); ++j)
          if (i != j) {
            ++pairs;
            bad += !section_identity(secs[i], secs[j]).holds;
          }
    }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " failures"};
}

Outcome c6_section_bound() {
  std::vector<int> got;
  bool ok = true;
  for (int n : {6, 8, 10}) {
    got.push_back(max_swap_closed_section(n));
    ok = ok && got.back() <= (n - 4) / 2;
  }
  return {ok && got[0] == 1, "bounds " + join(got)};
}

Outcome c7_vertical() {
  const CohClass target{2, -2, -1, -1, -1, -1, -1};
  const bool empty = vertical_decompositions(target).empty();
  std::size_t nonempty = 0;
  const auto targets = multiplicity_one_targets();
  for (const auto &t : targets)
    nonempty += !vertical_decompositions(t).empty();
  bool c_ok = true;
  try {
    invariant_exceptional_n6();
  } catch (const TheoremViolation &) {
    c_ok = false;
  }
  return {empty && nonempty == 0 && c_ok,
          std::string("main target ") + (empty ? "empty" : "nonempty") + ", " + std::to_string(targets.size()) +
              " multiplicity-1 targets with " + std::to_string(nonempty) + " decompositions"};
}

Outcome c8_fiber_pairs() {
  const std::vector<std::vector<std::int64_t>> want{{}, {}, {}, {1}, {}, {2}, {4}, {}, {}};
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 10; ++n) {
    std::vector<std::int64_t> a;
    for (const auto &p : fiber_pairs(n))
      a.push_back(p.a);
    ok = ok && a == want[n - 2];
    detail += "N=" + std::to_string(n) + ":[" + join(a) + "] ";
  }
  return {ok, detail};
}

Outcome c9_obstruction() {
  bool ok = true;
  std::string detail;
  for (int n : {5, 6, 7, 8}) {
    const auto o = blowdown_obstruction(n, -10000);
    if (n == 6)
      ok = ok && o.size() == 1 && o[0].a == -1 && o[0].m == 1;
    else
      ok = ok && o.empty();
    detail += "N=" + std::to_string(n) + ":" + std::to_string(o.size()) + " ";
  }
  return {ok, detail};
}

Outcome c10_cone() {
  std::size_t bad = 0;
  for (int n = 2; n <= 8; ++n) {
    const CohClass f = CohClass::h(n) - CohClass::e(n, 1);
    for (const auto &e : enumerate_exceptional(n).classes)
      bad += pairing(f, e) < 0;
    std::vector<Rational> grid;
    for (int i = 0; i < 50; ++i)
      grid.push_back(Rational(-2) + Rational(i, 10));
    try {
      slice_scan(n, f, canonical_class(n), grid);
    } catch (const TheoremViolation &) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " violations"};
}

Outcome c11_hexagon() {
  const WeightList t1{RotationPair{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
  const WeightList t2{RotationPair{1, 1}, {0, -1}, {1, 0}, {-1, -1}, {0, 1}, {-1, 0}};
  const bool table1 = propagate_rotation({1, 0}) == t1;
  const bool table2 = reduce(propagate_rotation({1, 1}), 2) == reduce(t2, 2);
  bool g3 = true;
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        g3 = g3 && g3_conjugation_check({a, b}, n);
  const bool inv = involution_nontrivial_conjugation();
  const auto trans = transitive_hexagon_subgroups();
  std::vector<std::string> names;
  for (const auto &s : trans)
    names.push_back(s.structure);
  return {table1 && table2 && g3 && inv && trans.size() == 2,
          std::string("table1 ") + (table1 ? "ok" : "bad") + ", table2 " + (table2 ? "ok mod 2" : "bad") +
              ", g3 " + (g3 ? "ok" : "bad") + ", involutions " + (inv ? "ok" : "bad") + ", transitive subgroups " +
              std::to_string(trans.size()) + " (" + join(names) + "), expected 2"};
}

Outcome c12_imprimitive() {
  const auto t0 = Clock::now();
  std::size_t groups = 0, bad = 0;
  for (std::int64_t n = 1; n <= 9; ++n) {
    auto check = [&](ImprimitiveKind kind, std::int64_t k, std::int64_t s) {
      ++groups;
      bad += make_imprimitive(kind, n, k, s).elements.size() != expected_order(kind, n, k);
    };
    check(ImprimitiveKind::Gn, 1, 0);
    check(ImprimitiveKind::GnTilde, 1, 0);
    if (n % 3 == 0)
      check(ImprimitiveKind::Gn32Tilde, 3, 2);
    for (std::int64_t k = 2; k <= n; ++k)
      if (n % k == 0)
        for (std::int64_t s = 0; s < n; ++s)
          if ((s * s - s + 1) % k == 0)
            check(ImprimitiveKind::Gnks, k, s);
  }
  const bool pres = presentation_check(5, 1, 0).holds && presentation_check(9, 3, 2).holds;
  std::size_t g2 = 0;
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      if (n % k == 0)
        for (std::int64_t b = 0; b < n; ++b)
          if ((b * b + b + 1) % k == 0) {
            ++g2;
            bad += !g2_action_check(n, k, b).holds;
          }
  const double t = since(t0);
  return {bad == 0 && pres && t < 30, std::to_string(groups) + " groups, " + std::to_string(g2) +
                                          " g2 checks, " + std::to_string(bad) + " failures, presentations " +
                                          (pres ? "ok" : "bad")};
}

Outcome c13_classifier() {
  std::size_t cases = 0, bad = 0;
  std::string first;
  auto expect = [&](bool cond, const std::string &what) {
    ++cases;
    if (!cond) {
      ++bad;
      if (first.empty())
        first = what;
    }
  };
  auto all_fibers = [](int n) {
    std::vector<int> f;
    for (int j = 2; j <= n; ++j)
      f.push_back(j);
    return f;
  };
  auto relabel_all = [&](const FiniteIsometryGroup &g, int n, const std::string &what) {
    const auto base = ConicBundleModel::standard(n);
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<std::pair<int, bool>> t;
      for (int j = 2; j <= n; ++j)
        t.emplace_back(j, (mask >> (j - 2) & 1u) != 0);
      expect(q_invariance_check(base, ConicBundleModel::relabeled(n, t), g), what + " relabel");
    }
  };
  for (int n = 4; n <= 9; ++n) {
    const auto model = ConicBundleModel::standard(n);
    if (n % 2 == 1) {
      const auto g = generate_group({swap_isometry(n, all_fibers(n))});
      expect(decompose(g, model, 1).tag == ConicCase::Case2Z2, "Z2 N=" + std::to_string(n));
      for (int m = 2; m <= 4; ++m) {
        const auto d = decompose(g, model, m);
        expect(d.tag == ConicCase::Case1Dihedral && d.q_structure == "D" + std::to_string(2 * m),
               "dihedral N=" + std::to_string(n));
      }
      // base action E_2 <-> E_3 on top of the full swap
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i)
        perm[i] = i + 1;
      std::swap(perm[1], perm[2]);
      const auto g2 = generate_group({swap_isometry(n, all_fibers(n)), Isometry::permutation(n, perm)});
      const auto d2 = decompose(g2, model, 3);
      expect(d2.tag == ConicCase::Case1Dihedral && d2.p_order == 2, "dihedral with base N=" + std::to_string(n));
      relabel_all(g, n, "Z2 N=" + std::to_string(n));
      relabel_all(g2, n, "dihedral with base N=" + std::to_string(n));
    }
    // Klein four: Sigma_i = fibers left invariant by tau_i
    std::vector<int> part(n - 1, 0);
    bool relabeled = false;
    for (;;) {
      std::array<int, 3> size{0, 0, 0};
      for (int p : part)
        ++size[p];
      bool ok = true;
      for (int s : size)
        ok = ok && (s - (n - 1)) % 2 == 0 && s < n - 1;
      if (ok) {
        std::array<std::vector<int>, 3> sigma;
        std::array<std::vector<int>, 3> swapped;
        for (int j = 2; j <= n; ++j)
          for (int i = 0; i < 3; ++i)
            (part[j - 2] == i ? sigma : swapped)[i].push_back(j);
        const auto g = generate_group({swap_isometry(n, swapped[0]), swap_isometry(n, swapped[1])});
        const auto d = decompose(g, model, 1);
        bool match = d.tag == ConicCase::Case2Klein && d.sigma && d.sigma->parity_ok;
        if (match) {
          std::set<std::vector<int>> a(sigma.begin(), sigma.end()), b(d.sigma->sigma.begin(), d.sigma->sigma.end());
          match = a == b;
          for (const auto &s : d.sigma->sigma)
            match = match && (static_cast<int>(s.size()) - (n - 1)) % 2 == 0;
        }
        expect(match, "Klein N=" + std::to_string(n));
        if (!relabeled) {
          relabel_all(g, n, "Klein N=" + std::to_string(n));
          relabeled = true;
        }
      }
      std::size_t p = 0;
      while (p < part.size() && part[p] == 2)
        part[p++] = 0;
      if (p == part.size())
        break;
      ++part[p];
    }
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " failures" +
                        (first.empty() ? "" : " (first: " + first + ")")};
}

} // namespace

std::vector<CriterionResult> run_selftest(const std::vector<int> &only, int threads) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"exceptional class counts", c1_counts},
      {"exceptional reduction", c2_reduction},
      {"Weyl group orders", [threads] { return c3_weyl(threads); }},
      {"trace and rank equivalence", c4_trace_rank},
      {"section identity", c5_sections},
      {"swap-closed section bound", c6_section_bound},
      {"vertical decompositions", c7_vertical},
      {"fiber pairs", c8_fiber_pairs},
      {"blow-down obstruction", c9_obstruction},
      {"cone monotonicity", c10_cone},
      {"hexagon calculus", c11_hexagon},
      {"imprimitive groups", c12_imprimitive},
      {"conic classifier", c13_classifier},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
      continue;
    CriterionResult r{id, all[i].first, false, "", 0};
    const auto t0 = Clock::now();
    try {
      const auto o = all[i].second();
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception &e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace rgs
