#pragma once

#include <vector>

#include "rgsurf/lattice.hpp"

namespace rgs {

// p[x] is the image of point x. Products act on the right: (p*q)[x] = q[p[x]].
using Perm = std::vector<int>;

Perm perm_mul(const Perm &p, const Perm &q);
Perm perm_inv(const Perm &p);
bool perm_is_identity(const Perm &p);

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm (every Schreier generator is sifted).
class StabilizerChain {
public:
  StabilizerChain(int degree, const std::vector<Perm> &gens);

  BigInt order() const;
  bool contains(const Perm &g) const;
  const std::vector<int> &base() const { return base_; }
  std::vector<std::size_t> orbit_sizes() const;

private:
  struct Level {
    int point;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> slot; // point -> index into trans, or -1
    std::vector<Perm> trans;
  };

  // Residue of g after sifting from level i; empty when it drops out of the
  // orbit at some level (then `level` reports where).
  Perm sift(Perm g, std::size_t i, std::size_t &level) const;
  void extend(const Perm &g, std::size_t i);
  void process(std::size_t i, int x, const Perm &s);

  int degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

} // namespace rgs
