#ifndef ANTIREG_COMBINATORICS_HPP
#define ANTIREG_COMBINATORICS_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace antireg {

// C(n, r); zero when r < 0 or r > n.
mpz_class binomial(long n, long r);

// Saturating machine-word binomial, used for guard checks only.
std::uint64_t binomial_u64(unsigned n, unsigned r);

// Calls f(const std::vector<unsigned>&) for every r-subset of {1..n} in
// lexicographic order. Returns early if f returns false.
template <typename F>
void for_each_subset(unsigned n, unsigned r, F&& f) {
  if (r > n) return;
  std::vector<unsigned> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i + 1;
  while (true) {
    if (!f(static_cast<const std::vector<unsigned>&>(idx))) return;
    int pos = static_cast<int>(r) - 1;
    while (pos >= 0 && idx[pos] == n - r + pos + 1) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (unsigned i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Next mask with the same popcount (Gosper's hack). Caller bounds the range.
inline std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace antireg

#endif  // ANTIREG_COMBINATORICS_HPP
