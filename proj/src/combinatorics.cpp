#include "antireg/combinatorics.hpp"

#include <limits>

namespace antireg {

mpz_class binomial(long n, long r) {
  mpz_class out;
  if (r < 0 || n < 0 || r > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

std::uint64_t binomial_u64(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > cap) return cap;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace antireg
