#include "rgsurf/perm_group.hpp"

namespace rgs {

Perm perm_mul(const Perm &p, const Perm &q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[x] = q[p[x]];
  return r;
}

Perm perm_inv(const Perm &p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[p[x]] = static_cast<int>(x);
  return r;
}

bool perm_is_identity(const Perm &p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x))
      return false;
  return true;
}

StabilizerChain::StabilizerChain(int degree, const std::vector<Perm> &gens) : degree_(degree) {
  for (const auto &g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw DomainError("permutation degree mismatch");
    extend(g, 0);
  }
}

Perm StabilizerChain::sift(Perm g, std::size_t i, std::size_t &level) const {
  for (; i < levels_.size(); ++i) {
    const auto &L = levels_[i];
    const int x = g[L.point];
    if (L.slot[x] < 0) {
      level = i;
      return g;
    }
    g = perm_mul(g, perm_inv(L.trans[L.slot[x]]));
  }
  level = levels_.size();
  return g;
}

bool StabilizerChain::contains(const Perm &g) const {
  std::size_t lv;
  Perm r = sift(g, 0, lv);
  return lv == levels_.size() && perm_is_identity(r);
}

void StabilizerChain::extend(const Perm &g, std::size_t i) {
  std::size_t lv;
  Perm r = sift(g, i, lv);
  if (lv == levels_.size() && perm_is_identity(r))
    return;
  if (i == levels_.size()) {
    int moved = 0;
    while (g[moved] == moved)
      ++moved;
    Level L;
    L.point = moved;
    L.slot.assign(degree_, -1);
    L.slot[moved] = 0;
    Perm id(degree_);
    for (int x = 0; x < degree_; ++x)
      id[x] = x;
    L.trans.push_back(id);
    L.orbit.push_back(moved);
    levels_.push_back(std::move(L));
    base_.push_back(moved);
  }
  levels_[i].gens.push_back(g);
  // existing orbit points against the new generator; new points pick up all
  // generators inside process()
  const std::size_t old = levels_[i].orbit.size();
  for (std::size_t t = 0; t < old; ++t)
    process(i, levels_[i].orbit[t], g);
}

void StabilizerChain::process(std::size_t i, int x, const Perm &s) {
  Perm cand = perm_mul(levels_[i].trans[levels_[i].slot[x]], s);
  const int y = s[x];
  if (levels_[i].slot[y] < 0) {
    levels_[i].slot[y] = static_cast<int>(levels_[i].trans.size());
    levels_[i].trans.push_back(std::move(cand));
    levels_[i].orbit.push_back(y);
    // copy: gens may grow while we recurse
    const auto gens = levels_[i].gens;
    for (const auto &t : gens)
      process(i, y, t);
  } else {
    Perm h = perm_mul(cand, perm_inv(levels_[i].trans[levels_[i].slot[y]]));
    if (!perm_is_identity(h))
      extend(h, i + 1);
  }
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto &L : levels_)
    o *= static_cast<unsigned long>(L.orbit.size());
  return o;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto &L : levels_)
    s.push_back(L.orbit.size());
  return s;
}

} // namespace rgs
