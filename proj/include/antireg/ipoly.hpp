#ifndef ANTIREG_IPOLY_HPP
#define ANTIREG_IPOLY_HPP

#include <cstddef>
#include <optional>

#include <gmpxx.h>

#include "antireg/errors.hpp"
#include "antireg/hypergraph.hpp"
#include "antireg/polynomial.hpp"

namespace antireg {

// Independence polynomials: the coefficient of x^i counts the i-subsets of
// V that contain no edge. A hypergraph with the empty edge has the zero
// polynomial.

/// Direct enumeration of all 2^n vertex subsets. Guarded at n <= 24.
Polynomial ipoly_bruteforce(const Hypergraph& h, Guard guard = Guard::enforce);

struct TrinksOptions {
  SupersetPolicy superset_policy = SupersetPolicy::prune;
  bool memoize = true;
};

/// Deletion/hiding recursion on the highest-index vertex:
///   I(H) = I(H ⊖ v) + x I(H ~ v)   if {v} is not an edge,
///   I(H) = I(H ⊖ v)                otherwise.
/// Memoized on (vertex count, canonical edge set). Guarded at n <= 40;
/// hard limit 64 either way.
Polynomial ipoly_trinks(const Hypergraph& h, Guard guard = Guard::enforce,
                        TrinksOptions options = {});

/// Antiregular recurrence on vertex count N, starting from (1+x)^i for
/// i <= k-1:
///   I(Ā_N) = (1+x) I(A_{N-1})
///   I(A_N) = I(Ā_{N-1}) + Σ_{i=1}^{k-1} C(N-1, i-1) x^i
/// Throws std::invalid_argument if n < 1 or k < 2.
Polynomial ipoly_antiregular_recurrence(std::size_t n, int k, bool connected);

/// Closed forms for k = 3, selected by parity of the vertex count n and the
/// connectivity flag. Valid for every n >= 1.
Polynomial ipoly_k3_closed(std::size_t n, bool connected);

/// Semi-closed forms built from the correction tables (see alpha_beta.hpp).
/// Guarded to vertex counts n >= k+1; throws std::invalid_argument below.
Polynomial ipoly_semiclosed(std::size_t n, int k, bool connected);

/// The same formulas without the n >= k+1 guard. Returns nullopt where a
/// formula is undefined (a negative power of 1+x would be needed).
std::optional<Polynomial> ipoly_semiclosed_unguarded(std::size_t n, int k, bool connected);

/// Smallest vertex count N0 with N0 ≡ parity (mod 2) such that the
/// unguarded semi-closed formula is defined and equals the recurrence for
/// every N in [N0, search_limit] of that parity. nullopt if none.
std::optional<std::size_t> semiclosed_validity_floor(int k, bool connected, int parity,
                                                     std::size_t search_limit);

struct CoefficientPair {
  mpz_class a_k;
  mpz_class a_k_plus_1;
};

/// Coefficients of x^k and x^{k+1} in I(Ā_{2n}):
///   a_k     = Σ_{i=⌊(k+1)/2⌋}^{n}   C(2i-1, k-1)
///   a_{k+1} = Σ_{i=⌊(k+1)/2⌋}^{n-1} C(2i-1, k-1) (n-i)
/// For k = 3 the product forms n(n-1)(4n+1)/6 and n²(n-1)(n-2)/6 are
/// checked as well (std::logic_error on mismatch).
CoefficientPair coeff_formulas(int k, std::size_t n);

struct LogConcavityReport {
  bool holds = true;
  /// Smallest interior index i with coeffs[i]^2 < coeffs[i-1] coeffs[i+1].
  std::optional<std::size_t> first_violation;
};

LogConcavityReport is_log_concave(const Polynomial& p);

}  // namespace antireg

#endif  // ANTIREG_IPOLY_HPP
