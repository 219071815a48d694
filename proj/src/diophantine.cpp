#include "rgsurf/diophantine.hpp"

#include <cmath>
#include <vector>

namespace rgs {

std::int64_t isqrt(std::int64_t v) {
  if (v <= 0)
    return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v)
    --r;
  while ((r + 1) * (r + 1) <= v)
    ++r;
  return r;
}

namespace {

struct Search {
  int len;
  std::vector<std::int64_t> x;
  const std::function<void(std::span<const std::int64_t>)> &visit;

  static bool feasible(std::int64_t k, std::int64_t s, std::int64_t q) {
    if (q < 0)
      return false;
    if (k == 0)
      return s == 0 && q == 0;
    // x^2 = x (mod 2) termwise
    if (((s - q) & 1) != 0)
      return false;
    return s * s <= k * q;
  }

  void go(int pos, std::int64_t s, std::int64_t q) {
    if (pos == len) {
      visit(x);
      return;
    }
    const std::int64_t rest = len - pos - 1;
    const std::int64_t r = isqrt(q);
    for (std::int64_t v = -r; v <= r; ++v) {
      if (!feasible(rest, s - v, q - v * v))
        continue;
      x[pos] = v;
      go(pos + 1, s - v, q - v * v);
    }
  }
};

} // namespace

void for_each_sum_squares(int len, std::int64_t s, std::int64_t q,
                          const std::function<void(std::span<const std::int64_t>)> &visit) {
  if (len < 0)
    return;
  Search st{len, std::vector<std::int64_t>(len, 0), visit};
  if (!Search::feasible(len, s, q))
    return;
  st.go(0, s, q);
}

} // namespace rgs
