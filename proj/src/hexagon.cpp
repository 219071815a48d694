#include "rgsurf/hexagon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rgsurf/exceptional.hpp"
#include "rgsurf/weyl.hpp"

namespace rgs {

namespace {

std::int64_t modn(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

} // namespace

std::array<CohClass, 6> hexagon_edges() {
  const int n = 3;
  return {CohClass::e(n, 1), h_ij(n, 1, 2), CohClass::e(n, 2),
          h_ij(n, 2, 3),     CohClass::e(n, 3), h_ij(n, 1, 3)};
}

bool hexagon_adjacency_ok() {
  const auto e = hexagon_edges();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == 5);
      if (pairing(e[i], e[j]) != (adjacent ? 1 : 0))
        return false;
    }
  auto exc = enumerate_exceptional(3).classes;
  std::vector<CohClass> edges(e.begin(), e.end());
  std::sort(exc.begin(), exc.end());
  std::sort(edges.begin(), edges.end());
  return exc == edges;
}

RotationPair RotationPair::mod(std::int64_t n) const {
  if (n < 1)
    throw DomainError("modulus must be positive");
  return {modn(a, n), modn(b, n)};
}

WeightList propagate_rotation(RotationPair p) {
  const auto a = p.a, b = p.b;
  return {RotationPair{a, b}, {a + b, -a}, {b, -a - b}, {-a, -b}, {-a - b, a}, {-b, a + b}};
}

WeightList reduce(const WeightList &l, std::int64_t n) {
  WeightList r;
  for (int i = 0; i < 6; ++i)
    r[i] = l[i].mod(n);
  return r;
}

WeightList conjugate_by_rotation(const WeightList &l, int j) {
  WeightList r;
  for (int i = 0; i < 6; ++i)
    r[i] = l[((i - j) % 6 + 6) % 6];
  return r;
}

RotationPair other_fixed_point(RotationPair p) {
  if (p.a == 0)
    throw DomainError("tangential weight 0: the sphere is fixed and has no isolated second fixed point");
  return {-p.a, p.a + p.b};
}

bool g3_conjugation_check(RotationPair h, std::int64_t n) {
  const auto l = reduce(propagate_rotation(h), n);
  return reduce(conjugate_by_rotation(l, 3), n) == reduce(propagate_rotation(-h), n);
}

TorusElement TorusElement::operator+(const TorusElement &o) const {
  if (n != o.n)
    throw DomainError("torus elements with different moduli");
  return {RotationPair{w.a + o.w.a, w.b + o.w.b}.mod(n), n};
}

TorusElement TorusElement::operator*(std::int64_t k) const {
  return {RotationPair{modn(w.a * modn(k, n), n), modn(w.b * modn(k, n), n)}, n};
}

namespace {

void check_gamma_pre(std::int64_t n, std::int64_t k, std::int64_t b) {
  if (n < 1 || k < 1)
    throw DomainError("n and k must be positive");
  if (n % k != 0)
    throw DomainError("k = " + std::to_string(k) + " does not divide n = " + std::to_string(n));
  if (modn(b * b + b + 1, k) != 0)
    throw DomainError("b^2 + b + 1 is not divisible by k");
}

} // namespace

Gamma build_gamma(std::int64_t n, std::int64_t k, std::int64_t b) {
  check_gamma_pre(n, k, b);
  Gamma g{n, k, modn(b, n), {{0, modn(k, n)}, n}, {{1, modn(b, n)}, n}, {}};
  std::set<std::pair<std::int64_t, std::int64_t>> seen{{0, 0}};
  std::vector<TorusElement> todo{{{0, 0}, n}};
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (const auto &gen : {g.h1, g.h1_tilde}) {
      const auto x = todo[i] + gen;
      if (seen.insert({x.w.a, x.w.b}).second)
        todo.push_back(x);
    }
  std::sort(todo.begin(), todo.end(), [](const TorusElement &x, const TorusElement &y) {
    return std::tie(x.w.a, x.w.b) < std::tie(y.w.a, y.w.b);
  });
  g.elements = std::move(todo);
  return g;
}

G2Check g2_action_check(std::int64_t n, std::int64_t k, std::int64_t b) {
  const Gamma g = build_gamma(n, k, b);
  G2Check out;
  bool found = false;
  for (std::int64_t v = 0; v < n && !found; ++v)
    if (modn(k * v - (b * b + b + 1), n) == 0)
      out.v = v, found = true;
  if (!found)
    throw DomainError("k v = b^2 + b + 1 (mod n) has no solution");
  auto conj2 = [&](const TorusElement &h) {
    return reduce(conjugate_by_rotation(propagate_rotation(h.w), 2), n);
  };
  const TorusElement rhs1 = g.h1_tilde * (-k) + g.h1 * b;
  const TorusElement rhs2 = g.h1_tilde * (-b - 1) + g.h1 * out.v;
  out.holds = conj2(g.h1) == reduce(propagate_rotation(rhs1.w), n) &&
              conj2(g.h1_tilde) == reduce(propagate_rotation(rhs2.w), n);
  return out;
}

MonomialElement MonomialElement::make(std::array<int, 3> sigma, std::array<std::int64_t, 3> c, std::int64_t n) {
  if (n < 1)
    throw DomainError("modulus must be positive");
  std::array<int, 3> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2})
    throw DomainError("sigma is not a permutation of {0,1,2}");
  MonomialElement m;
  m.sigma = sigma;
  m.n = n;
  for (int i = 0; i < 3; ++i)
    m.c[i] = modn(c[i] - c[0], n);
  return m;
}

MonomialElement MonomialElement::operator*(const MonomialElement &y) const {
  if (n != y.n)
    throw DomainError("monomial elements with different moduli");
  std::array<int, 3> s{};
  std::array<std::int64_t, 3> cc{};
  for (int i = 0; i < 3; ++i) {
    s[i] = y.sigma[sigma[i]];
    cc[i] = c[i] + y.c[sigma[i]];
  }
  return make(s, cc, n);
}

MonomialElement MonomialElement::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 0; i < 3; ++i)
    inv[sigma[i]] = i;
  std::array<std::int64_t, 3> cc{};
  for (int j = 0; j < 3; ++j)
    cc[j] = -c[inv[j]];
  return make(inv, cc, n);
}

MonomialElement MonomialElement::pow(std::int64_t e) const {
  MonomialElement base = e < 0 ? inverse() : *this;
  MonomialElement r = make({0, 1, 2}, {0, 0, 0}, n);
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i)
    r = r * base;
  return r;
}

std::string MonomialElement::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    if (i)
      s += ",";
    if (c[i])
      s += "mu^" + std::to_string(c[i]) + " ";
    s += "z" + std::to_string(sigma[i]);
  }
  return s + "]";
}

ImprimitiveKind parse_imprimitive_kind(const std::string &s) {
  if (s == "Gn")
    return ImprimitiveKind::Gn;
  if (s == "GnTilde" || s == "Gtn")
    return ImprimitiveKind::GnTilde;
  if (s == "Gnks")
    return ImprimitiveKind::Gnks;
  if (s == "Gn32Tilde" || s == "Gtn32")
    return ImprimitiveKind::Gn32Tilde;
  throw DomainError("unknown group kind '" + s + "'");
}

const char *to_string(ImprimitiveKind k) {
  switch (k) {
  case ImprimitiveKind::Gn:
    return "Gn";
  case ImprimitiveKind::GnTilde:
    return "GnTilde";
  case ImprimitiveKind::Gnks:
    return "Gnks";
  case ImprimitiveKind::Gn32Tilde:
    return "Gn32Tilde";
  }
  return "?";
}

std::size_t expected_order(ImprimitiveKind kind, std::int64_t n, std::int64_t k) {
  const auto n2 = static_cast<std::size_t>(n * n);
  switch (kind) {
  case ImprimitiveKind::Gn:
    return 3 * n2;
  case ImprimitiveKind::GnTilde:
    return 6 * n2;
  case ImprimitiveKind::Gnks:
    return 3 * n2 / static_cast<std::size_t>(k);
  case ImprimitiveKind::Gn32Tilde:
    return 2 * n2;
  }
  return 0;
}

MonomialGroup make_imprimitive(ImprimitiveKind kind, std::int64_t n, std::int64_t k, std::int64_t s) {
  if (n < 1)
    throw DomainError("n must be positive");
  using M = MonomialElement;
  const M cyc = M::make({2, 0, 1}, {0, 0, 0}, n);
  MonomialGroup g;
  switch (kind) {
  case ImprimitiveKind::Gn:
    g.generators = {M::make({0, 1, 2}, {1, 0, 0}, n), M::make({0, 1, 2}, {0, 1, 0}, n), cyc};
    break;
  case ImprimitiveKind::GnTilde:
    g.generators = {M::make({0, 1, 2}, {1, 0, 0}, n), M::make({0, 1, 2}, {0, 1, 0}, n),
                    M::make({0, 2, 1}, {0, 0, 0}, n), cyc};
    break;
  case ImprimitiveKind::Gnks:
    if (k <= 1 || n % k != 0)
      throw DomainError("G_{n,k,s} needs k > 1 dividing n");
    if (modn(s * s - s + 1, k) != 0)
      throw DomainError("s^2 - s + 1 is not divisible by k");
    g.generators = {M::make({0, 1, 2}, {k, 0, 0}, n), M::make({0, 1, 2}, {s, 1, 0}, n), cyc};
    break;
  case ImprimitiveKind::Gn32Tilde:
    if (n % 3 != 0)
      throw DomainError("the order-2n^2 group needs 3 | n");
    g.generators = {M::make({0, 1, 2}, {3, 0, 0}, n), M::make({0, 1, 2}, {2, 1, 0}, n),
                    M::make({0, 2, 1}, {0, 0, 0}, n), M::make({1, 0, 2}, {0, 0, 0}, n)};
    break;
  }
  std::set<M> seen{M::make({0, 1, 2}, {0, 0, 0}, n)};
  std::vector<M> todo(seen.begin(), seen.end());
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (const auto &gen : g.generators) {
      const M x = gen * todo[i];
      if (seen.insert(x).second)
        todo.push_back(x);
    }
  g.elements.assign(seen.begin(), seen.end());
  return g;
}

PresentationCheck presentation_check(std::int64_t n, std::int64_t k, std::int64_t s) {
  if (n < 1 || k < 1 || n % k != 0)
    throw DomainError("presentation needs k | n");
  PresentationCheck out;
  bool found = false;
  for (std::int64_t v = 0; v < n && !found; ++v)
    if (modn(k * v - (s * s - s + 1), n) == 0)
      out.v = v, found = true;
  if (!found)
    throw DomainError("s^2 - s + 1 = k v (mod n) has no solution");
  using M = MonomialElement;
  const M t1 = M::make({0, 1, 2}, {k, 0, 0}, n);
  const M t2 = M::make({0, 1, 2}, {s, 1, 0}, n);
  const M g2 = M::make({2, 0, 1}, {0, 0, 0}, n);
  const M g2i = g2.inverse();
  out.holds = g2 * t1 * g2i == t2.pow(k) * t1.pow(-s) && g2 * t2 * g2i == t2.pow(s - 1) * t1.pow(-out.v);
  return out;
}

namespace {

using EdgePerm = std::array<int, 6>;

EdgePerm compose_edges(const EdgePerm &p, const EdgePerm &q) {
  EdgePerm r{};
  for (int i = 0; i < 6; ++i)
    r[i] = p[q[i]];
  return r;
}

std::vector<EdgePerm> hexagon_automorphisms() {
  const auto edges = hexagon_edges();
  const auto w3 = generate_group(simple_reflections(3));
  std::vector<EdgePerm> out;
  for (std::size_t i = 0; i < w3.order(); ++i) {
    const Isometry g = w3.element(i);
    EdgePerm p{};
    for (int e = 0; e < 6; ++e) {
      const CohClass img = g.apply(edges[e]);
      p[e] = static_cast<int>(std::find(edges.begin(), edges.end(), img) - edges.begin());
      if (p[e] == 6)
        throw TheoremViolation("W_3 does not preserve the hexagon");
    }
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgePerm> closure(const std::vector<EdgePerm> &gens) {
  std::set<EdgePerm> seen{{0, 1, 2, 3, 4, 5}};
  std::vector<EdgePerm> todo(seen.begin(), seen.end());
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (const auto &g : gens) {
      const auto x = compose_edges(g, todo[i]);
      if (seen.insert(x).second)
        todo.push_back(x);
    }
  return {seen.begin(), seen.end()};
}

int element_order(const EdgePerm &p) {
  EdgePerm x = p;
  int k = 1;
  while (x != EdgePerm{0, 1, 2, 3, 4, 5}) {
    x = compose_edges(p, x);
    ++k;
  }
  return k;
}

std::string structure_name(const std::vector<EdgePerm> &els) {
  const std::size_t o = els.size();
  int max_order = 1;
  for (const auto &e : els)
    max_order = std::max(max_order, element_order(e));
  if (static_cast<std::size_t>(max_order) == o)
    return o == 1 ? "1" : "Z" + std::to_string(o);
  if (o == 4)
    return "Z2xZ2";
  if (o == 6)
    return "S3";
  if (o == 12)
    return "D12";
  return "order" + std::to_string(o);
}

} // namespace

std::vector<HexagonSubgroup> hexagon_subgroups() {
  const auto all = hexagon_automorphisms();
  // every subgroup of a dihedral group is generated by at most two elements
  std::set<std::vector<EdgePerm>> subs;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      subs.insert(closure({all[i], all[j]}));
  std::vector<HexagonSubgroup> out;
  for (const auto &s : subs)
    out.push_back({s.size(), structure_name(s), s});
  std::sort(out.begin(), out.end(), [](const HexagonSubgroup &x, const HexagonSubgroup &y) {
    return std::tie(x.order, x.structure, x.elements) < std::tie(y.order, y.structure, y.elements);
  });
  return out;
}

std::vector<HexagonSubgroup> transitive_hexagon_subgroups() {
  std::vector<HexagonSubgroup> out;
  for (auto &s : hexagon_subgroups()) {
    std::set<int> orbit;
    for (const auto &p : s.elements)
      orbit.insert(p[0]);
    if (orbit.size() == 6)
      out.push_back(std::move(s));
  }
  return out;
}

bool involution_nontrivial_conjugation() {
  for (const RotationPair p : {RotationPair{1, 0}, RotationPair{1, 1}}) {
    const auto l = reduce(propagate_rotation(p), 2);
    if (reduce(conjugate_by_rotation(l, 1), 2) == l)
      return false;
  }
  return true;
}

} // namespace rgs
