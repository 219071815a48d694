#include "rgsurf/weyl.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "rgsurf/diophantine.hpp"
#include "rgsurf/integer_matrix.hpp"
#include "rgsurf/perm_group.hpp"

namespace rgs {

RootSystem root_system(int n) {
  if (n < 3 || n > 8)
    throw DomainError("root systems are defined here for 3 <= N <= 8");
  static const char *types[] = {"A2+A1", "A4", "D5", "E6", "E7", "E8"};
  RootSystem rs{n, types[n - 3], {}};
  rs.simple_roots.push_back(h_ijk(n, 1, 2, 3));
  for (int i = 1; i < n; ++i)
    rs.simple_roots.push_back(CohClass::e(n, i) - CohClass::e(n, i + 1));
  return rs;
}

std::vector<CohClass> all_roots(int n) {
  if (n < 3 || n > 8)
    throw DomainError("root enumeration needs 3 <= N <= 8");
  // (3a)^2 <= N (a^2 + 2)  <=>  (9 - N) a^2 <= 2N
  std::int64_t amax = 0;
  while ((9 - n) * (amax + 1) * (amax + 1) <= 2 * n)
    ++amax;
  std::vector<CohClass> out;
  for (std::int64_t a = -amax; a <= amax; ++a)
    for_each_sum_squares(n, 3 * a, a * a + 2, [&](std::span<const std::int64_t> b) {
      out.push_back(CohClass::from_degree_form(a, b));
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Isometry> simple_reflections(int n) {
  std::vector<Isometry> g;
  for (const auto &r : root_system(n).simple_roots)
    g.push_back(reflection(r));
  return g;
}

bool fixes_canonical(const Isometry &g) {
  const auto k = canonical_class(g.n());
  return g.apply(k) == k;
}

Isometry FiniteIsometryGroup::element(std::size_t idx) const {
  const std::size_t d = static_cast<std::size_t>(n_ + 1) * (n_ + 1);
  std::vector<std::int64_t> e(data_.begin() + static_cast<std::ptrdiff_t>(idx * d),
                              data_.begin() + static_cast<std::ptrdiff_t>((idx + 1) * d));
  return Isometry::from_flat(n_, std::move(e));
}

std::int64_t FiniteIsometryGroup::trace(std::size_t idx) const {
  const std::size_t dim = n_ + 1, d = dim * dim;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim; ++i)
    s += data_[idx * d + i * dim + i];
  return s;
}

std::vector<Isometry> FiniteIsometryGroup::sorted_elements() const {
  std::vector<Isometry> v;
  v.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i)
    v.push_back(element(i));
  std::sort(v.begin(), v.end(), [](const Isometry &a, const Isometry &b) { return a.flat() < b.flat(); });
  return v;
}

namespace {

struct SparseEntry {
  int row, col;
  std::int64_t v;
};

std::uint64_t hash_entries(const std::int16_t *p, std::size_t d) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < d; ++i) {
    h ^= static_cast<std::uint16_t>(p[i]);
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

// left product gen * elem, written to out; false on int16 overflow
bool left_multiply(const std::vector<SparseEntry> &gen, const std::int16_t *elem, std::size_t dim,
                   std::int16_t *out) {
  std::int64_t acc[16 * 16];
  std::fill(acc, acc + dim * dim, 0);
  for (const auto &e : gen) {
    const std::int16_t *src = elem + e.col * dim;
    std::int64_t *dst = acc + e.row * dim;
    for (std::size_t j = 0; j < dim; ++j)
      dst[j] += e.v * src[j];
  }
  for (std::size_t i = 0; i < dim * dim; ++i) {
    if (acc[i] < std::numeric_limits<std::int16_t>::min() || acc[i] > std::numeric_limits<std::int16_t>::max())
      return false;
    out[i] = static_cast<std::int16_t>(acc[i]);
  }
  return true;
}

class ElementTable {
public:
  ElementTable(std::vector<std::int16_t> &data, std::size_t d) : data_(data), d_(d) { rehash(1u << 10); }

  // index of the element, inserting it when new; second = inserted
  std::pair<std::size_t, bool> insert(const std::int16_t *p, std::size_t count) {
    if (2 * (count + 1) > slots_.size())
      rehash(slots_.size() * 2, count);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_entries(p, d_) & mask;; s = (s + 1) & mask) {
      const auto idx = slots_[s];
      if (idx == kEmpty) {
        slots_[s] = static_cast<std::uint32_t>(count);
        data_.insert(data_.end(), p, p + d_);
        return {count, true};
      }
      if (std::equal(p, p + d_, data_.data() + static_cast<std::size_t>(idx) * d_))
        return {idx, false};
    }
  }

private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  void rehash(std::size_t size, std::size_t count = 0) {
    slots_.assign(size, kEmpty);
    const std::size_t mask = size - 1;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t s = hash_entries(data_.data() + i * d_, d_) & mask;
      while (slots_[s] != kEmpty)
        s = (s + 1) & mask;
      slots_[s] = static_cast<std::uint32_t>(i);
    }
  }

  std::vector<std::int16_t> &data_;
  std::size_t d_;
  std::vector<std::uint32_t> slots_;
};

} // namespace

FiniteIsometryGroup generate_group(const std::vector<Isometry> &gens, std::size_t limit, int threads) {
  if (gens.empty())
    throw DomainError("group needs at least one generator");
  const int n = gens[0].n();
  if (n > 15)
    throw DomainError("closure supports N <= 15");
  for (const auto &g : gens) {
    if (g.n() != n)
      throw DomainError("generators of different dimension");
    if (auto w = pairing_defect(g))
      throw DomainError("generator is not an isometry: " + w->str());
  }
  if (limit >= std::numeric_limits<std::uint32_t>::max() / 2)
    limit = std::numeric_limits<std::uint32_t>::max() / 2 - 1;
  threads = std::max(1, threads);

  FiniteIsometryGroup G;
  G.n_ = n;
  G.gens_ = gens;
  const std::size_t dim = n + 1, d = dim * dim;
  std::vector<std::vector<SparseEntry>> sparse;
  for (const auto &g : gens) {
    std::vector<SparseEntry> s;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        if (g(i, k))
          s.push_back({static_cast<int>(i), static_cast<int>(k), g(i, k)});
    sparse.push_back(std::move(s));
  }

  ElementTable table(G.data_, d);
  std::vector<std::int16_t> id(d, 0);
  for (std::size_t i = 0; i < dim; ++i)
    id[i * dim + i] = 1;
  table.insert(id.data(), 0);
  G.count_ = 1;

  const std::size_t ng = gens.size();
  const std::size_t chunk = 4096;
  std::vector<std::int16_t> buf;
  std::vector<char> ok;
  std::size_t next = 0;
  while (next < G.count_) {
    const std::size_t stop = std::min(G.count_, next + chunk);
    const std::size_t m = (stop - next) * ng;
    buf.resize(m * d);
    ok.assign(m, 1);
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        const std::size_t e = next + t / ng, gi = t % ng;
        ok[t] = left_multiply(sparse[gi], G.data_.data() + e * d, dim, buf.data() + t * d);
      }
    };
    if (threads == 1 || m < 256) {
      work(0, m);
    } else {
      std::vector<std::thread> pool;
      const std::size_t per = (m + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        const std::size_t lo = t * per, hi = std::min(m, lo + per);
        if (lo < hi)
          pool.emplace_back(work, lo, hi);
      }
      for (auto &th : pool)
        th.join();
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (!ok[t])
        throw DomainError("group element entries exceed compact storage range");
      if (table.insert(buf.data() + t * d, G.count_).second) {
        ++G.count_;
        if (G.count_ > limit)
          throw LimitExceeded("group closure exceeded " + std::to_string(limit) + " elements");
      }
    }
    next = stop;
  }
  G.data_.shrink_to_fit();
  return G;
}

BigInt group_order_via_chain(const std::vector<Isometry> &gens, const std::vector<CohClass> &points) {
  if (gens.empty())
    return 1;
  const int n = gens[0].n();
  std::map<CohClass, int> index;
  for (const auto &p : points) {
    if (p.n() != n)
      throw DomainError("point dimension mismatch");
    index.emplace(p, static_cast<int>(index.size()));
  }
  BigMatrix span;
  for (const auto &[p, i] : index)
    span.emplace_back(p.coords().begin(), p.coords().end());
  const int r = rank_over_q(span);
  bool faithful = r == n + 1;
  if (!faithful && r == n) {
    const auto k = canonical_class(n);
    faithful = std::all_of(gens.begin(), gens.end(), fixes_canonical) &&
               std::all_of(index.begin(), index.end(), [&](const auto &pi) { return pairing(pi.first, k) == 0; });
  }
  if (!faithful)
    throw DomainError("cannot certify a faithful action on the given points");

  std::vector<Perm> perms;
  for (const auto &g : gens) {
    Perm p(index.size());
    for (const auto &[pt, i] : index) {
      auto it = index.find(g.apply(pt));
      if (it == index.end())
        throw DomainError("point set is not invariant under the generators");
      p[i] = it->second;
    }
    if (perm_is_identity(p) && !g.is_identity())
      throw DomainError("unfaithful action: a non-identity generator fixes every point");
    perms.push_back(std::move(p));
  }
  return StabilizerChain(static_cast<int>(index.size()), perms).order();
}

InvariantLattice invariant_lattice(const std::vector<Isometry> &gens, int n) {
  const int dim = n + 1;
  BigMatrix stacked;
  for (const auto &g : gens) {
    if (g.n() != n)
      throw DomainError("generator dimension mismatch");
    for (int i = 0; i < dim; ++i) {
      BigVector row(dim);
      for (int j = 0; j < dim; ++j)
        row[j] = g(i, j) - (i == j ? 1 : 0);
      stacked.push_back(std::move(row));
    }
  }
  BigMatrix ker = integer_kernel(stacked, dim);
  InvariantLattice out;
  out.rank = static_cast<int>(ker.size());
  for (const auto &v : ker) {
    std::vector<std::int64_t> c;
    for (const auto &x : v) {
      if (!x.fits_slong_p())
        throw DomainError("invariant basis entry out of range");
      c.push_back(x.get_si());
    }
    out.basis.emplace_back(std::move(c));
  }
  return out;
}

std::int64_t character_sum(const FiniteIsometryGroup &g) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    s += g.trace(i);
  return s;
}

TraceSum trace_sum_condition(const FiniteIsometryGroup &g) {
  for (const auto &x : g.generators())
    if (!fixes_canonical(x))
      throw DomainError("trace condition needs every generator to fix K");
  TraceSum t;
  // H^2 = R_N + Z K over Q, and K is fixed
  t.sum = character_sum(g) - static_cast<std::int64_t>(g.order());
  t.holds = t.sum == 0;
  return t;
}

const char *to_string(Dichotomy d) {
  switch (d) {
  case Dichotomy::Rank1:
    return "Rank1";
  case Dichotomy::Rank2:
    return "Rank2";
  case Dichotomy::Neither:
    return "Neither";
  }
  return "?";
}

namespace {

BigInt pair_big(const CohClass &x, const CohClass &y) {
  BigInt s = BigInt(static_cast<long>(x[0])) * static_cast<long>(y[0]);
  for (int i = 1; i <= x.n(); ++i)
    s -= BigInt(static_cast<long>(x[i])) * static_cast<long>(y[i]);
  return s;
}

// x u + y v with F^2 = 0 and K.F = -2
std::vector<CohClass> solve_fiber_candidates(const CohClass &u, const CohClass &v) {
  const auto K = canonical_class(u.n());
  const BigInt ku = pair_big(K, u), kv = pair_big(K, v);
  const BigInt uu = pair_big(u, u), uv = pair_big(u, v), vv = pair_big(v, v);
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ku.get_mpz_t(), kv.get_mpz_t());
  if (g == 0 || BigInt(2) % g != 0)
    return {};
  const BigInt x0 = s * (-2 / g), y0 = t * (-2 / g);
  const BigInt dx = kv / g, dy = -ku / g;
  const BigInt A = dx * dx * uu + 2 * dx * dy * uv + dy * dy * vv;
  const BigInt B = 2 * (x0 * dx * uu + (x0 * dy + y0 * dx) * uv + y0 * dy * vv);
  const BigInt C = x0 * x0 * uu + 2 * x0 * y0 * uv + y0 * y0 * vv;
  std::vector<BigInt> taus;
  if (A == 0) {
    if (B == 0) {
      if (C == 0)
        throw DomainError("fiber candidates form an infinite family");
      return {};
    }
    if (C % B == 0)
      taus.push_back(-C / B);
  } else {
    const BigInt disc = B * B - 4 * A * C;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
      return {};
    const BigInt sq = sqrt(disc);
    for (const BigInt &num : {BigInt(-B + sq), BigInt(-B - sq)})
      if (num % (2 * A) == 0)
        taus.push_back(num / (2 * A));
  }
  std::set<CohClass> found;
  for (const auto &tau : taus) {
    const BigInt x = x0 + dx * tau, y = y0 + dy * tau;
    std::vector<std::int64_t> c(u.n() + 1);
    BigInt content = 0;
    for (int i = 0; i <= u.n(); ++i) {
      BigInt e = x * static_cast<long>(u[i]) + y * static_cast<long>(v[i]);
      if (!e.fits_slong_p())
        throw DomainError("fiber candidate out of range");
      c[i] = e.get_si();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
    }
    if (content == 1)
      found.insert(CohClass(std::move(c)));
  }
  return {found.begin(), found.end()};
}

} // namespace

DichotomyResult minimality_rank_dichotomy(const std::vector<Isometry> &gens, int n) {
  for (const auto &g : gens)
    if (!fixes_canonical(g))
      throw DomainError("dichotomy needs every generator to fix K");
  DichotomyResult r;
  r.lattice = invariant_lattice(gens, n);
  if (r.lattice.rank == 1) {
    r.kind = Dichotomy::Rank1;
  } else if (r.lattice.rank == 2) {
    r.kind = Dichotomy::Rank2;
    r.fiber_candidates = solve_fiber_candidates(r.lattice.basis[0], r.lattice.basis[1]);
  } else {
    r.kind = Dichotomy::Neither;
  }
  return r;
}

} // namespace rgs
