#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rgsurf/isometry.hpp"
#include "rgsurf/weyl.hpp"

namespace rgs {

// Conic bundle with fiber F = H - E_1 and singular fibers j = 2..N. Fiber j
// consists of comp(j) and F - comp(j). The standard model has comp(j) = E_j;
// an adapted relabelling uses comp(j) in {E_k, F - E_k} for a bijection j -> k.
class ConicBundleModel {
public:
  static ConicBundleModel standard(int n);
  // targets[j-2] = {k, swapped}: comp(j) = E_k, or F - E_k when swapped.
  static ConicBundleModel relabeled(int n, const std::vector<std::pair<int, bool>> &targets);

  int n() const { return n_; }
  CohClass fiber() const;
  const CohClass &comp(int j) const { return comps_[j - 2]; }
  CohClass other(int j) const { return fiber() - comp(j); }

private:
  int n_ = 0;
  std::vector<CohClass> comps_;
};

// pi and eps are indexed by fiber j = 2..N at position j-2. eps = -1 means
// comp(j) goes to the other component of fiber pi(j).
struct FiberAction {
  std::vector<int> pi;
  std::vector<int> eps;

  bool trivial_on_base() const;
  bool is_identity() const;
  bool full_swap() const;
  int swap_count() const;
  bool operator==(const FiberAction &o) const = default;
};

FiberAction fiber_action(const Isometry &g, const ConicBundleModel &model);
// (g h) applies h first.
FiberAction compose(const FiberAction &g, const FiberAction &h);
// Matrix of the standard-model fiber action; needs an even number of swaps.
Isometry isometry_from_fiber_action(int n, const FiberAction &a);
// Swap the fibers in `fibers` (values in 2..N), fixing all labels.
Isometry swap_isometry(int n, const std::vector<int> &fibers);

bool is_minimal_bundle(const std::vector<Isometry> &elements, const ConicBundleModel &model);

struct SigmaPartition {
  std::array<std::vector<int>, 3> sigma;
  bool parity_ok = false;
};

// Klein four group given by its three involutions (image level).
SigmaPartition sigma_partition(const std::array<FiberAction, 3> &taus, int n);

enum class ConicCase { Case1Dihedral, Case1Cyclic, Case2Z2, Case2Klein, NotMinimal, Violation };
const char *to_string(ConicCase c);

struct GroupDecomposition {
  std::size_t order = 0;
  std::size_t qbar_order = 0; // image of Q in the isometry group
  std::size_t p_order = 0;    // order of the induced permutation group on fibers
  int g0_order = 1;
  bool minimal = false;
  ConicCase tag = ConicCase::NotMinimal;
  std::string q_structure;
  std::optional<SigmaPartition> sigma;
  std::vector<int> fixed_fiber_counts; // per nontrivial element of the Q image
  std::string certificate;             // set when tag == Violation
};

// Q image = elements trivial on the base. m = |G_0| is supplied by the
// caller since G_0 acts trivially on H^2.
GroupDecomposition decompose(const FiniteIsometryGroup &g, const ConicBundleModel &model, int g0_order);

// Elements (indices into g) that act trivially on the base under model.
std::vector<std::size_t> q_image(const FiniteIsometryGroup &g, const ConicBundleModel &model);
bool q_invariance_check(const ConicBundleModel &model, const ConicBundleModel &other, const FiniteIsometryGroup &g);

struct SectionIdentity {
  int r = 0;
  std::int64_t m = 0, m_prime = 0, dot = 0;
  bool holds = false;
};

// E, E' in section normal form E_1 + cF + sum_t c_t E_t with all c_t in
// {0, 1}, or all c_t in {0, -1} (both classes in the same convention).
SectionIdentity section_identity(const CohClass &e, const CohClass &e_prime);
CohClass section_class(int n, std::int64_t c, const std::vector<int> &coeffs);

// Largest m such that a section of square -m is compatible with a group of
// fiber swaps covering every singular fiber: every swap image g.S must have
// g.S . S >= 0 with the section identity. N even, N >= 6.
int max_swap_closed_section(int n);

// Nonnegative combinations of E_j, F - E_j (j = 2..N) and F equal to target,
// each as a sorted list of components with repetition.
std::vector<std::vector<CohClass>> vertical_decompositions(const CohClass &target);

// C = -K - F = 2H - E_2 - ... - E_6 for N = 6, with its three checks.
CohClass invariant_exceptional_n6();

// F-hat = C - E_1 - E' for the sections E' (E'.F = 1) with positive degree,
// E'^2 >= -1 and degree <= max_degree.
std::vector<CohClass> multiplicity_one_targets(std::int64_t max_degree = 6);

} // namespace rgs
