#include "antireg/alpha_beta.hpp"

#include <stdexcept>
#include <string>

#include "antireg/combinatorics.hpp"

namespace antireg {

namespace {

AlphaBetaTable solve_levels(CorrectionKind kind, int k, int n_max) {
  if (k < 2) throw std::invalid_argument("correction table: k must be at least 2");
  if (n_max < (k + 2) / 2) {
    throw std::invalid_argument("correction table: n_max must be at least ceil((k+1)/2) = " +
                                std::to_string((k + 2) / 2));
  }
  const int parity = kind == CorrectionKind::alpha ? 0 : 1;
  const int top_out = 2 * n_max + parity;
  const int top = top_out + 2 * (k - 1);
  const int slots = (top - parity) / 2 + 1;
  auto slot = [parity](int level) { return static_cast<std::size_t>((level - parity) / 2); };

  // rows[i][slot(ℓ)] = γ_i^ℓ; row i is valid up to level top - 2(k-1-i).
  std::vector<std::vector<mpz_class>> rows(static_cast<std::size_t>(k),
                                           std::vector<mpz_class>(static_cast<std::size_t>(slots)));
  for (int level = parity; level <= top; level += 2) {
    rows[k - 1][slot(level)] = binomial(level, k - 2);
  }
  for (int i = k - 1; i >= 1; --i) {
    const int valid_top = top - 2 * (k - i);
    for (int level = parity; level <= valid_top; level += 2) {
      rows[i - 1][slot(level)] =
          rows[i][slot(level + 2)] - rows[i][slot(level)] + binomial(level + 1, i - 1);
    }
  }

  for (int level = parity + 2; level <= top_out; level += 2) {
    if (rows[0][slot(level)] != rows[0][slot(parity)]) {
      throw std::logic_error("correction table: index-0 coefficient varies across levels (k = " +
                             std::to_string(k) + ", level " + std::to_string(level) + ")");
    }
  }

  AlphaBetaTable table{kind, k, {}};
  for (int level = parity; level <= top_out; level += 2) {
    std::vector<mpz_class> row;
    row.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) row.push_back(rows[i][slot(level)]);
    table.levels.emplace(level, std::move(row));
  }
  return table;
}

}  // namespace

const mpz_class& AlphaBetaTable::at(int level, int index) const {
  const auto it = levels.find(level);
  if (it == levels.end() || index < 0 || index >= k) {
    throw std::out_of_range("correction table: no entry at level " + std::to_string(level) +
                            ", index " + std::to_string(index));
  }
  return it->second[static_cast<std::size_t>(index)];
}

AlphaBetaTable solve_alpha(int k, int n_max) { return solve_levels(CorrectionKind::alpha, k, n_max); }

AlphaBetaTable solve_beta(int k, int n_max) { return solve_levels(CorrectionKind::beta, k, n_max); }

}  // namespace antireg
