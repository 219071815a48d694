#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace rgs {

std::int64_t isqrt(std::int64_t v); // floor(sqrt(v)), v >= 0

// Visits every integer vector x of length len with sum(x) = s and
// sum(x_i^2) = q. Order: lexicographic, ascending. Pruned with
// Cauchy-Schwarz on the unfilled tail, (sum)^2 <= k * (sum of squares).
void for_each_sum_squares(int len, std::int64_t s, std::int64_t q,
                          const std::function<void(std::span<const std::int64_t>)> &visit);

} // namespace rgs
