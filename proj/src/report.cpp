#include "rgsurf/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "rgsurf/cone.hpp"
#include "rgsurf/exceptional.hpp"
#include "rgsurf/gconic.hpp"
#include "rgsurf/hexagon.hpp"
#include "rgsurf/selftest.hpp"
#include "rgsurf/weyl.hpp"

#ifndef RGSURF_VERSION
#define RGSURF_VERSION "0.0.0"
#endif

namespace rgs {

namespace {

template <class T> T get_or(const Json &in, const char *key, T fallback) {
  auto it = in.find(key);
  if (it == in.end() || it->is_null())
    return fallback;
  return it->get<T>();
}

int require_n(const Json &in, int lo, int hi) {
  if (!in.contains("n") || in["n"].is_null())
    throw DomainError("missing n");
  const int n = in["n"].get<int>();
  if (n < lo || n > hi)
    throw DomainError("n = " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return n;
}

Json classes_to_json(const std::vector<CohClass> &v) {
  Json a = Json::array();
  for (const auto &c : v)
    a.push_back(class_to_json(c));
  return a;
}

Rational rational_from_json(const Json &v) {
  if (v.is_number_integer())
    return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  throw DomainError("expected an integer or a \"p/q\" string, got " + v.dump());
}

Json run_exc(const Json &in) {
  const int n = require_n(in, 1, 30);
  std::optional<std::int64_t> bound;
  if (in.contains("max_degree") && !in["max_degree"].is_null())
    bound = in["max_degree"].get<std::int64_t>();
  const auto set = enumerate_exceptional(n, bound);
  Json r{{"n", n},
         {"count", set.classes.size()},
         {"complete", set.complete},
         {"max_degree", set.max_degree},
         {"classes", classes_to_json(set.classes)}};
  if (get_or(in, "reduce", false)) {
    Json red = Json::array();
    for (const auto &c : set.classes) {
      if (c.degree() < 0) {
        red.push_back(nullptr);
        continue;
      }
      const auto t = reduce_exceptional(c);
      red.push_back({{"final_index", t.final_index}, {"steps", t.steps.size()}});
    }
    r["reductions"] = std::move(red);
  }
  return r;
}

Json run_reduce(const Json &in) {
  if (!in.contains("class"))
    throw DomainError("missing class");
  const auto w = symplectic_from_json(in["class"]);
  const std::string mode = get_or<std::string>(in, "mode", "auto");
  if (mode != "auto" && mode != "exceptional" && mode != "symplectic")
    throw DomainError("mode must be auto, exceptional or symplectic");
  bool integral = std::all_of(w.coords().begin(), w.coords().end(),
                              [](const Rational &q) { return q.get_den() == 1; });
  std::optional<CohClass> c;
  if (integral)
    c = integral_from_json(in["class"]);
  const bool exc = mode == "exceptional" || (mode == "auto" && c && is_exceptional(*c));
  if (exc) {
    if (!c || !is_exceptional(*c))
      throw DomainError("class is not exceptional");
    const auto t = reduce_exceptional(*c);
    Json steps = Json::array();
    for (const auto &s : t.steps)
      steps.push_back({{"ijk", {s.i, s.j, s.k}}, {"before", class_to_json(s.before)},
                       {"after", class_to_json(s.after)}});
    return {{"mode", "exceptional"}, {"steps", steps}, {"final_index", t.final_index}};
  }
  const auto red = reduce_symplectic(w, get_or(in, "max_iters", 10000));
  Json r{{"mode", "symplectic"},
         {"reduced", class_to_json(red.reduced)},
         {"cremona_steps", red.cremona_steps},
         {"symplectic", red.symplectic},
         {"map", red.map.rows()}};
  if (red.symplectic && w.n() >= 3) {
    const auto st = structure_test(red.reduced, true);
    r["structure"] = to_string(st.kind);
    r["minimal_candidates"] = classes_to_json(st.minimal_candidates);
  } else {
    r["structure"] = nullptr;
  }
  return r;
}

Json run_weyl(const Json &in, const RunOptions &opt) {
  const int n = require_n(in, 3, 8);
  std::string method = get_or<std::string>(in, "method", "auto");
  if (method == "auto")
    method = n <= 7 ? "closure" : "chain";
  const auto rs = root_system(n);
  Json r{{"n", n},
         {"type", rs.type},
         {"roots", all_roots(n).size()},
         {"simple_roots", classes_to_json(rs.simple_roots)},
         {"method", method}};
  const auto gens = simple_reflections(n);
  if (method == "closure") {
    const auto limit = get_or<std::size_t>(in, "limit", kDefaultGroupLimit);
    r["order"] = generate_group(gens, limit, opt.threads).order();
  } else if (method == "chain") {
    const BigInt o = group_order_via_chain(gens, enumerate_exceptional(n).classes);
    r["order"] = o.get_ui();
  } else {
    throw DomainError("method must be auto, closure or chain");
  }
  return r;
}

std::optional<int> optional_n(const Json &in) {
  if (in.contains("n") && !in["n"].is_null())
    return in["n"].get<int>();
  return std::nullopt;
}

Json run_invariants(const Json &in, const RunOptions &opt) {
  const auto gens = parse_group_json(in.at("matrices"), optional_n(in));
  const int n = gens.front().n();
  const auto g = generate_group(gens, get_or<std::size_t>(in, "limit", kDefaultGroupLimit), opt.threads);
  const auto lat = invariant_lattice(g);
  const std::int64_t chi = character_sum(g);
  Json r{{"n", n},
         {"order", g.order()},
         {"rank", lat.rank},
         {"basis", classes_to_json(lat.basis)},
         {"character_sum", chi},
         {"rank_identity", static_cast<std::int64_t>(g.order()) * lat.rank == chi}};
  const bool fixes_k = std::all_of(gens.begin(), gens.end(), fixes_canonical);
  if (fixes_k) {
    const auto ts = trace_sum_condition(g);
    r["trace_sum"] = ts.sum;
    r["trace_sum_holds"] = ts.holds;
    const auto d = minimality_rank_dichotomy(gens, n);
    r["dichotomy"] = to_string(d.kind);
    r["fiber_candidates"] = classes_to_json(d.fiber_candidates);
  } else {
    r["trace_sum"] = nullptr;
    r["trace_sum_holds"] = nullptr;
    r["dichotomy"] = nullptr;
    r["fiber_candidates"] = nullptr;
  }
  return r;
}

Json run_conic(const Json &in, const RunOptions &opt) {
  const auto gens = parse_group_json(in.at("matrices"), optional_n(in));
  const int n = gens.front().n();
  ConicBundleModel model = ConicBundleModel::standard(n);
  if (in.contains("model") && !in["model"].is_null()) {
    std::vector<std::pair<int, bool>> targets;
    for (const auto &t : in["model"])
      targets.emplace_back(t.at(0).get<int>(), t.at(1).get<bool>());
    model = ConicBundleModel::relabeled(n, targets);
  }
  const auto g = generate_group(gens, get_or<std::size_t>(in, "limit", kDefaultGroupLimit), opt.threads);
  const auto d = decompose(g, model, get_or(in, "g0_order", 1));
  Json r{{"n", n},
         {"order", d.order},
         {"qbar_order", d.qbar_order},
         {"p_order", d.p_order},
         {"g0_order", d.g0_order},
         {"minimal", d.minimal},
         {"tag", to_string(d.tag)},
         {"q_structure", d.q_structure},
         {"fixed_fiber_counts", d.fixed_fiber_counts},
         {"certificate", d.certificate.empty() ? Json(nullptr) : Json(d.certificate)}};
  if (d.sigma)
    r["sigma"] = {{"parts", {d.sigma->sigma[0], d.sigma->sigma[1], d.sigma->sigma[2]}},
                  {"parity_ok", d.sigma->parity_ok}};
  else
    r["sigma"] = nullptr;
  return r;
}

Json run_cone(const Json &in) {
  const int n = require_n(in, 1, 30);
  const std::int64_t a_min = get_or<std::int64_t>(in, "a_min", -10000);
  Json pairs = Json::array(), pair_classes = Json::array(), obs = Json::array();
  for (const auto &p : fiber_pairs(n)) {
    pairs.push_back(p.a);
    pair_classes.push_back(class_to_json(p.f_prime));
  }
  for (const auto &o : blowdown_obstruction(n, a_min))
    obs.push_back({{"a", o.a}, {"m", o.m}});
  Json r{{"n", n},
         {"k_squared", 9 - n},
         {"fiber_pairs", pairs},
         {"fiber_pair_classes", pair_classes},
         {"blowdown_obstruction", obs}};
  const CohClass k0 = canonical_class(n);
  const CohClass f = CohClass::h(n) - CohClass::e(n, 1);
  const std::int64_t bound = get_or<std::int64_t>(in, "degree_bound", 5);
  if (in.contains("class") && !in["class"].is_null()) {
    const auto w = symplectic_from_json(in["class"]);
    if (w.n() != n)
      throw DomainError("class dimension does not match n");
    const auto c = is_in_cone(w, bound);
    Json m{{"verdict", to_string(c.verdict)},
           {"witness", c.witness ? class_to_json(*c.witness) : Json(nullptr)},
           {"degree_bound", c.degree_bound},
           {"classes_checked", c.classes_checked}};
    try {
      m["delta"] = to_string(delta(w, f, k0));
    } catch (const DomainError &) {
      m["delta"] = nullptr;
    }
    r["membership"] = std::move(m);
  }
  if (in.contains("scan") && !in["scan"].is_null()) {
    const auto &s = in["scan"];
    const Rational lo = rational_from_json(s.value("lo", Json("-2")));
    const Rational hi = rational_from_json(s.value("hi", Json("3")));
    const int points = s.value("points", 50);
    if (points < 2 || hi <= lo)
      throw DomainError("scan needs lo < hi and at least two points");
    std::vector<Rational> grid;
    for (int i = 0; i < points; ++i)
      grid.push_back(lo + (hi - lo) * i / (points - 1));
    const auto sl = slice_scan(n, f, k0, grid, bound);
    Json samples = Json::array();
    for (const auto &[d, inside] : sl.samples)
      samples.push_back({{"delta", to_string(d)}, {"inside", inside}});
    r["scan"] = {{"samples", samples},
                 {"last_outside", sl.last_outside ? Json(to_string(*sl.last_outside)) : Json(nullptr)},
                 {"first_inside", sl.first_inside ? Json(to_string(*sl.first_inside)) : Json(nullptr)},
                 {"full_mode", sl.full_mode}};
  }
  return r;
}

Json run_hexagon(const Json &in) {
  const auto kind = parse_imprimitive_kind(get_or<std::string>(in, "kind", "Gn"));
  const std::int64_t n = get_or<std::int64_t>(in, "n", 0);
  std::int64_t k = get_or<std::int64_t>(in, "k", 1), s = get_or<std::int64_t>(in, "s", 0);
  if (kind == ImprimitiveKind::Gn || kind == ImprimitiveKind::GnTilde)
    k = 1, s = 0;
  if (kind == ImprimitiveKind::Gn32Tilde)
    k = 3, s = 2;
  const auto g = make_imprimitive(kind, n, k, s);
  Json gens = Json::array();
  for (const auto &x : g.generators)
    gens.push_back(x.str());
  const auto expected = expected_order(kind, n, k);
  Json r{{"kind", to_string(kind)},
         {"n", n},
         {"k", k},
         {"s", s},
         {"order", g.elements.size()},
         {"expected_order", expected},
         {"order_ok", g.elements.size() == expected},
         {"generators", gens},
         {"relations_ok", nullptr},
         {"v", nullptr}};
  if (get_or(in, "verify", false)) {
    const auto p = presentation_check(n, k, s);
    r["relations_ok"] = p.holds;
    r["v"] = p.v;
  }
  return r;
}

Json run_selftest_json(const Json &in, const RunOptions &opt) {
  const auto only = get_or<std::vector<int>>(in, "only", {});
  Json crit = Json::array();
  int passed = 0;
  const auto results = run_selftest(only, opt.threads);
  for (const auto &c : results) {
    passed += c.pass;
    crit.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"criteria", crit},
          {"passed", passed},
          {"failed", static_cast<int>(results.size()) - passed},
          {"all_pass", passed == static_cast<int>(results.size())}};
}

} // namespace

std::vector<Isometry> parse_group_json(const Json &matrices, std::optional<int> n) {
  if (!matrices.is_array() || matrices.empty())
    throw DomainError("group file must be a non-empty JSON array of matrices");
  std::vector<Isometry> out;
  int dim = -1;
  for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
    const auto &m = matrices[idx];
    if (!m.is_array() || m.empty())
      throw DomainError("matrix " + std::to_string(idx) + " is not a non-empty array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto &row : m) {
      if (!row.is_array() || row.size() != m.size())
        throw DomainError("matrix " + std::to_string(idx) + " is not square");
      std::vector<std::int64_t> r;
      for (const auto &v : row) {
        if (!v.is_number_integer())
          throw DomainError("matrix " + std::to_string(idx) + " has a non-integer entry " + v.dump());
        r.push_back(v.get<std::int64_t>());
      }
      rows.push_back(std::move(r));
    }
    if (dim < 0)
      dim = static_cast<int>(rows.size());
    else if (dim != static_cast<int>(rows.size()))
      throw DomainError("matrices of different sizes in one group file");
    if (dim < 2)
      throw DomainError("matrices must be at least 2x2");
    Isometry g = Isometry::from_rows(rows);
    if (auto w = pairing_defect(g))
      throw DomainError("matrix " + std::to_string(idx) + " is not an isometry: " + w->str());
    out.push_back(std::move(g));
  }
  if (n && *n != dim - 1)
    throw DomainError("--n " + std::to_string(*n) + " conflicts with matrix size " + std::to_string(dim) +
                      " (N = " + std::to_string(dim - 1) + ")");
  return out;
}

Json class_to_json(const CohClass &c) { return c.coords(); }

Json class_to_json(const SymplecticClass &w) {
  Json a = Json::array();
  for (const auto &q : w.coords())
    a.push_back(to_string(q));
  return a;
}

SymplecticClass symplectic_from_json(const Json &coords) {
  if (!coords.is_array() || coords.size() < 2)
    throw DomainError("a class needs at least two coordinates");
  std::vector<Rational> q;
  for (const auto &v : coords)
    q.push_back(rational_from_json(v));
  return SymplecticClass::from_coords(std::move(q));
}

CohClass integral_from_json(const Json &coords) {
  const auto w = symplectic_from_json(coords);
  std::vector<std::int64_t> c;
  for (const auto &q : w.coords()) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      throw DomainError("expected integer coordinates");
    c.push_back(q.get_num().get_si());
  }
  return CohClass(std::move(c));
}

const std::vector<std::string> &command_names() {
  static const std::vector<std::string> names{"exc",  "reduce", "weyl",    "invariants",
                                              "conic", "cone",   "hexagon", "selftest"};
  return names;
}

Json run_command(const std::string &command, const Json &inputs, const RunOptions &opt) {
  if (!inputs.is_object())
    throw DomainError("inputs must be a JSON object");
  try {
    if (command == "exc")
      return run_exc(inputs);
    if (command == "reduce")
      return run_reduce(inputs);
    if (command == "weyl")
      return run_weyl(inputs, opt);
    if (command == "invariants")
      return run_invariants(inputs, opt);
    if (command == "conic")
      return run_conic(inputs, opt);
    if (command == "cone")
      return run_cone(inputs);
    if (command == "hexagon")
      return run_hexagon(inputs);
    if (command == "selftest")
      return run_selftest_json(inputs, opt);
  } catch (const nlohmann::json::exception &e) {
    throw DomainError(std::string("malformed input: ") + e.what());
  }
  throw DomainError("unknown command '" + command + "'");
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string render_report(const std::string &command, const Json &inputs, const Json &results,
                          std::optional<double> seconds) {
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a64(inputs.dump())));
  Json r{{"command", command},
         {"inputs", inputs},
         {"inputs_digest", digest},
         {"results", results},
         {"version", RGSURF_VERSION}};
  if (seconds)
    r["timing_seconds"] = *seconds;
  return r.dump(2) + "\n";
}

} // namespace rgs
