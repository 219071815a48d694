#include "rgsurf/isometry.hpp"

namespace rgs {

Isometry Isometry::from_flat(int n, std::vector<std::int64_t> entries) {
  if (n < 1 || entries.size() != static_cast<std::size_t>((n + 1) * (n + 1)))
    throw DomainError("matrix must be (N+1)x(N+1) with N >= 1");
  Isometry g;
  g.n_ = n;
  g.a_ = std::move(entries);
  return g;
}

Isometry Isometry::from_rows(const std::vector<std::vector<std::int64_t>> &rows) {
  const auto d = rows.size();
  if (d < 2)
    throw DomainError("matrix must have at least 2 rows");
  std::vector<std::int64_t> flat;
  flat.reserve(d * d);
  for (const auto &r : rows) {
    if (r.size() != d)
      throw DomainError("matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_flat(static_cast<int>(d) - 1, std::move(flat));
}

Isometry Isometry::identity(int n) {
  std::vector<std::int64_t> a(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (int i = 0; i <= n; ++i)
    a[static_cast<std::size_t>(i) * (n + 1) + i] = 1;
  return from_flat(n, std::move(a));
}

Isometry Isometry::permutation(int n, const std::vector<int> &perm) {
  if (perm.size() != static_cast<std::size_t>(n))
    throw DomainError("permutation length must equal N");
  std::vector<bool> seen(n + 1, false);
  Isometry g = identity(n);
  for (int i = 1; i <= n; ++i) {
    int t = perm[i - 1];
    if (t < 1 || t > n || seen[t])
      throw DomainError("not a permutation of 1..N");
    seen[t] = true;
    g(i, i) = 0;
  }
  for (int i = 1; i <= n; ++i)
    g(perm[i - 1], i) = 1;
  return g;
}

std::vector<std::vector<std::int64_t>> Isometry::rows() const {
  std::vector<std::vector<std::int64_t>> r(dim());
  for (int i = 0; i < dim(); ++i)
    r[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i) * dim(),
                a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * dim());
  return r;
}

CohClass Isometry::apply(const CohClass &x) const {
  if (x.n() != n_)
    throw DomainError("dimension mismatch applying isometry");
  CohClass y = CohClass::zero(n_);
  for (int r = 0; r < dim(); ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < dim(); ++c)
      if ((*this)(r, c))
        s = checked::add(s, checked::mul((*this)(r, c), x[c]));
    y[r] = s;
  }
  return y;
}

SymplecticClass Isometry::apply(const SymplecticClass &x) const {
  if (x.n() != n_)
    throw DomainError("dimension mismatch applying isometry");
  std::vector<Rational> y(dim());
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c)
      if ((*this)(r, c))
        y[r] += x.coords()[c] * static_cast<long>((*this)(r, c));
  return SymplecticClass::from_coords(std::move(y));
}

CohClass Isometry::image_of_basis(int j) const {
  CohClass y = CohClass::zero(n_);
  for (int r = 0; r < dim(); ++r)
    y[r] = (*this)(r, j);
  return y;
}

Isometry Isometry::operator*(const Isometry &o) const {
  if (o.n_ != n_)
    throw DomainError("dimension mismatch composing isometries");
  Isometry p = from_flat(n_, std::vector<std::int64_t>(a_.size(), 0));
  for (int i = 0; i < dim(); ++i)
    for (int k = 0; k < dim(); ++k) {
      const auto v = (*this)(i, k);
      if (!v)
        continue;
      for (int j = 0; j < dim(); ++j)
        if (o(k, j))
          p(i, j) = checked::add(p(i, j), checked::mul(v, o(k, j)));
    }
  return p;
}

Isometry Isometry::inverse() const {
  Isometry t = *this;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      const int sign = ((i == 0) == (j == 0)) ? 1 : -1;
      t(i, j) = sign * (*this)(j, i);
    }
  return t;
}

std::int64_t Isometry::trace() const {
  std::int64_t s = 0;
  for (int i = 0; i < dim(); ++i)
    s += (*this)(i, i);
  return s;
}

bool Isometry::is_identity() const { return *this == identity(n_); }

std::string PairingWitness::str() const {
  return "image pairing of basis vectors " + std::to_string(i) + "," + std::to_string(j) + " is " +
         std::to_string(got) + ", expected " + std::to_string(expected);
}

std::optional<PairingWitness> pairing_defect(const Isometry &g) {
  const PicardLattice lat(g.n());
  std::vector<CohClass> cols;
  for (int j = 0; j < g.dim(); ++j)
    cols.push_back(g.image_of_basis(j));
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) {
      auto p = pairing(cols[i], cols[j]);
      if (p != lat.gram(i, j))
        return PairingWitness{i, j, p, lat.gram(i, j)};
    }
  return std::nullopt;
}

Isometry reflection(const CohClass &alpha) {
  if (square(alpha) != -2)
    throw DomainError("reflection needs a class of square -2, got " + std::to_string(square(alpha)));
  const int n = alpha.n();
  // column j: e_j + (e_j . alpha) alpha; e_j . alpha = gram(j,j) alpha_j
  Isometry g = Isometry::identity(n);
  for (int j = 0; j <= n; ++j) {
    const std::int64_t p = (j == 0 ? 1 : -1) * alpha[j];
    for (int r = 0; r <= n; ++r)
      g(r, j) += p * alpha[r];
  }
  return g;
}

} // namespace rgs
