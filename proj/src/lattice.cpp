#include "rgsurf/lattice.hpp"

#include <sstream>

namespace rgs {

std::string to_string(const Rational &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string &text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t')
      t.push_back(c);
  if (t.empty())
    throw DomainError("empty rational literal");
  Rational q;
  try {
    auto slash = t.find('/');
    if (slash == std::string::npos) {
      q = Rational(BigInt(t, 10));
    } else {
      BigInt num(t.substr(0, slash), 10);
      BigInt den(t.substr(slash + 1), 10);
      if (den == 0)
        throw DomainError("zero denominator in '" + text + "'");
      q = Rational(num, den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument &) {
    throw DomainError("malformed rational '" + text + "'");
  }
  return q;
}

PicardLattice::PicardLattice(int n_blowups) : n_(n_blowups) {
  if (n_blowups < 1)
    throw DomainError("lattice needs at least one blow-up");
}

CohClass::CohClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty())
    throw DomainError("class needs at least the H coordinate");
}

CohClass::CohClass(std::initializer_list<std::int64_t> coords)
    : CohClass(std::vector<std::int64_t>(coords)) {}

CohClass CohClass::zero(int n) { return CohClass(std::vector<std::int64_t>(n + 1, 0)); }

CohClass CohClass::h(int n) {
  auto c = zero(n);
  c[0] = 1;
  return c;
}

CohClass CohClass::e(int n, int i) {
  if (i < 1 || i > n)
    throw DomainError("exceptional index " + std::to_string(i) + " out of range");
  auto c = zero(n);
  c[i] = 1;
  return c;
}

CohClass CohClass::from_degree_form(std::int64_t a, std::span<const std::int64_t> b) {
  std::vector<std::int64_t> c;
  c.reserve(b.size() + 1);
  c.push_back(a);
  for (auto v : b)
    c.push_back(-v);
  return CohClass(std::move(c));
}

static void require_same(int a, int b) {
  if (a != b)
    throw DomainError("dimension mismatch: N=" + std::to_string(a) + " vs N=" + std::to_string(b));
}

CohClass CohClass::operator+(const CohClass &o) const {
  require_same(n(), o.n());
  CohClass r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = checked::add(r.coords_[i], o.coords_[i]);
  return r;
}

CohClass CohClass::operator-(const CohClass &o) const {
  require_same(n(), o.n());
  CohClass r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = checked::sub(r.coords_[i], o.coords_[i]);
  return r;
}

CohClass CohClass::operator-() const { return CohClass::zero(n()) - *this; }

CohClass operator*(std::int64_t k, const CohClass &x) {
  CohClass r = x;
  for (auto &c : r.coords_)
    c = checked::mul(k, c);
  return r;
}

std::string CohClass::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << coords_[i];
  os << ']';
  return os.str();
}

SymplecticClass::SymplecticClass(Rational nu, std::vector<Rational> lambda) {
  coords_.reserve(lambda.size() + 1);
  coords_.push_back(std::move(nu));
  for (auto &l : lambda)
    coords_.push_back(-l);
}

SymplecticClass SymplecticClass::from_coords(std::vector<Rational> coords) {
  if (coords.empty())
    throw DomainError("class needs at least the H coordinate");
  SymplecticClass w;
  w.coords_ = std::move(coords);
  return w;
}

SymplecticClass SymplecticClass::from_class(const CohClass &c) {
  std::vector<Rational> q;
  for (auto v : c.coords())
    q.emplace_back(static_cast<long>(v));
  return from_coords(std::move(q));
}

SymplecticClass SymplecticClass::operator+(const SymplecticClass &o) const {
  require_same(n(), o.n());
  SymplecticClass r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] += o.coords_[i];
  return r;
}

SymplecticClass SymplecticClass::operator-() const {
  SymplecticClass r = *this;
  for (auto &c : r.coords_)
    c = -c;
  return r;
}

SymplecticClass operator*(const Rational &k, const SymplecticClass &x) {
  SymplecticClass r = x;
  for (auto &c : r.coords_)
    c *= k;
  return r;
}

std::string SymplecticClass::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i)
      s += ',';
    s += '"' + to_string(coords_[i]) + '"';
  }
  return s + "]";
}

std::int64_t pairing(const CohClass &x, const CohClass &y) {
  require_same(x.n(), y.n());
  std::int64_t s = checked::mul(x[0], y[0]);
  for (int i = 1; i <= x.n(); ++i)
    s = checked::sub(s, checked::mul(x[i], y[i]));
  return s;
}

Rational pairing(const SymplecticClass &x, const CohClass &y) {
  require_same(x.n(), y.n());
  Rational s = x.coords()[0] * static_cast<long>(y[0]);
  for (int i = 1; i <= x.n(); ++i)
    s -= x.coords()[i] * static_cast<long>(y[i]);
  return s;
}

Rational pairing(const CohClass &x, const SymplecticClass &y) { return pairing(y, x); }

Rational pairing(const SymplecticClass &x, const SymplecticClass &y) {
  require_same(x.n(), y.n());
  Rational s = x.coords()[0] * y.coords()[0];
  for (int i = 1; i <= x.n(); ++i)
    s -= x.coords()[i] * y.coords()[i];
  return s;
}

CohClass canonical_class(int n) {
  if (n < 1)
    throw DomainError("canonical class needs N >= 1");
  std::vector<std::int64_t> c(n + 1, 1);
  c[0] = -3;
  return CohClass(std::move(c));
}

CohClass h_ij(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw DomainError("H_ij needs 1 <= i < j <= N");
  return CohClass::h(n) - CohClass::e(n, i) - CohClass::e(n, j);
}

CohClass h_ijk(int n, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= n))
    throw DomainError("H_ijk needs 1 <= i < j < k <= N");
  return CohClass::h(n) - CohClass::e(n, i) - CohClass::e(n, j) - CohClass::e(n, k);
}

bool is_characteristic(const CohClass &e) {
  // e.H = c_0 against H.H = 1; e.E_i = -c_i against E_i.E_i = -1.
  for (int i = 0; i <= e.n(); ++i)
    if ((e[i] - 1) % 2 != 0)
      return false;
  return true;
}

bool is_reduced_class(const SymplecticClass &w) {
  const int n = w.n();
  if (n < 3)
    throw DomainError("reduced-class test needs N >= 3");
  for (int i = 1; i < n; ++i)
    if (w.lambda(i) < w.lambda(i + 1))
      return false;
  if (w.lambda(n) <= 0)
    return false;
  return w.nu() >= w.lambda(1) + w.lambda(2) + w.lambda(3);
}

std::optional<Rational> monotone_factor(const SymplecticClass &w) {
  // K = (-3, 1, ..., 1); w = t K needs w_0 = -3t and w_i = t.
  const Rational t = w.coords()[0] / -3;
  if (t >= 0)
    return std::nullopt;
  for (int i = 1; i <= w.n(); ++i)
    if (w.coords()[i] != t)
      return std::nullopt;
  return t;
}

} // namespace rgs
