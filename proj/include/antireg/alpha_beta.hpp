#ifndef ANTIREG_ALPHA_BETA_HPP
#define ANTIREG_ALPHA_BETA_HPP

#include <map>
#include <vector>

#include <gmpxx.h>

namespace antireg {

enum class CorrectionKind { alpha, beta };

/// Correction coefficients of the semi-closed forms, one row of k values
/// per level. Alpha rows live on even levels, beta rows on odd levels. Both
/// satisfy, for consecutive levels ℓ and ℓ+2 of their parity,
///
///   γ_0^ℓ = γ_0^{ℓ+2}
///   γ_i^ℓ + γ_{i-1}^ℓ - γ_i^{ℓ+2} = C(ℓ+1, i-1)     1 <= i <= k-1
///   γ_{k-1}^ℓ = C(ℓ, k-2)
struct AlphaBetaTable {
  CorrectionKind kind;
  int k;
  std::map<int, std::vector<mpz_class>> levels;

  /// Throws std::out_of_range for a level or index not in the table.
  const mpz_class& at(int level, int index) const;
};

/// Levels 0, 2, ..., 2 n_max. Requires k >= 2 and n_max >= ⌈(k+1)/2⌉
/// (std::invalid_argument otherwise).
///
/// Solved by descending back-substitution: γ_{k-1} is known on every level,
/// then γ_{i-1}^ℓ = γ_i^{ℓ+2} - γ_i^ℓ + C(ℓ+1, i-1) for i = k-1..1, so
/// γ_{k-1} is materialized up to level 2 n_max + 2(k-1). A non-constant γ_0
/// throws std::logic_error.
AlphaBetaTable solve_alpha(int k, int n_max);

/// Levels 1, 3, ..., 2 n_max + 1; otherwise as solve_alpha.
AlphaBetaTable solve_beta(int k, int n_max);

}  // namespace antireg

#endif  // ANTIREG_ALPHA_BETA_HPP
