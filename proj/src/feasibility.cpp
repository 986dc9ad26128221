#include "antireg/feasibility.hpp"

#include <stdexcept>
#include <string>

#include "antireg/combinatorics.hpp"

namespace antireg {

namespace {

constexpr std::uint64_t kSubsetGuard = 5000;

// Dense phase-one simplex over the rationals with Bland's rule:
//   minimize Σ a   subject to   M y + a = rhs,  y, a >= 0,  rhs >= 0.
// Artificial variables a start in the basis.
class PhaseOne {
 public:
  PhaseOne(std::vector<std::vector<mpq_class>> columns, std::vector<mpq_class> rhs)
      : rows_(rhs.size()), structural_(columns.size()) {
    const std::size_t width = structural_ + rows_ + 1;
    tableau_.assign(rows_, std::vector<mpq_class>(width));
    objective_.assign(width, mpq_class(0));
    for (std::size_t j = 0; j < structural_; ++j) {
      for (std::size_t r = 0; r < rows_; ++r) tableau_[r][j] = columns[j][r];
    }
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      tableau_[r][structural_ + r] = 1;
      tableau_[r][width - 1] = rhs[r];
      basis_[r] = structural_ + r;
    }
    // Reduced costs with the artificial basis: d_j = c_j - Σ_r column_j[r].
    for (std::size_t j = 0; j < width; ++j) {
      mpq_class sum;
      for (std::size_t r = 0; r < rows_; ++r) sum += tableau_[r][j];
      const bool artificial = j >= structural_ && j + 1 < width;
      objective_[j] = (artificial ? mpq_class(1) : mpq_class(0)) - sum;
    }
  }

  void solve() {
    const std::size_t width = structural_ + rows_ + 1;
    while (true) {
      std::size_t entering = width;
      for (std::size_t j = 0; j + 1 < width; ++j) {
        if (sgn(objective_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == width) return;

      std::size_t leaving = rows_;
      mpq_class best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(tableau_[r][entering]) <= 0) continue;
        mpq_class ratio = tableau_[r][width - 1] / tableau_[r][entering];
        if (leaving == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (leaving == rows_) throw std::logic_error("phase one: unbounded, which cannot happen");
      pivot(leaving, entering);
    }
  }

  mpq_class value() const { return -objective_.back(); }

  // Level of structural variable j in the current basic solution.
  mpq_class structural_value(std::size_t j) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] == j) return tableau_[r].back();
    }
    return 0;
  }

  // Simplex multiplier of row r, read off the artificial column's reduced cost.
  mpq_class multiplier(std::size_t r) const { return 1 - objective_[structural_ + r]; }

 private:
  void pivot(std::size_t row, std::size_t col) {
    auto& prow = tableau_[row];
    const mpq_class p = prow[col];
    for (auto& x : prow) x /= p;
    auto eliminate = [&](std::vector<mpq_class>& target) {
      const mpq_class f = target[col];
      if (sgn(f) == 0) return;
      for (std::size_t j = 0; j < target.size(); ++j) {
        if (sgn(prow[j]) != 0) target[j] -= f * prow[j];
      }
    };
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != row) eliminate(tableau_[r]);
    }
    eliminate(objective_);
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::vector<std::vector<mpq_class>> tableau_;
  std::vector<mpq_class> objective_;
  std::vector<std::size_t> basis_;
};

mpz_class common_denominator(const std::vector<mpq_class>& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace

FeasibilityVerdict t2_feasibility(const Hypergraph& h, Guard guard) {
  const auto k_opt = h.uniformity();
  if (!k_opt) throw std::invalid_argument("t2_feasibility: hypergraph must be k-uniform");
  const auto k = static_cast<unsigned>(*k_opt);
  const auto n = static_cast<unsigned>(h.vertex_count());
  const auto subsets = binomial_u64(n, k);
  if (subsets > kSubsetGuard && guard == Guard::enforce) {
    throw GuardExceeded("t2_feasibility: C(n, k) = " + std::to_string(subsets) +
                        " exceeds the guard C(n, k) <= 5000");
  }

  // Variables x = (c_1..c_n, tau). Each k-subset S gives a row of A x <= b:
  //   S ∈ E:  -(Σ_S c) + tau <= -1
  //   S ∉ E:   (Σ_S c) - tau <= 0
  // Farkas: infeasible iff some y >= 0 has A^T y = 0 and -b^T y = 1.
  std::vector<Edge> subset_list;
  std::vector<bool> is_edge;
  std::vector<std::vector<mpq_class>> columns;
  for_each_subset(n, k, [&](const std::vector<unsigned>& s) {
    Edge e(s.begin(), s.end());
    const bool edge = h.contains_edge(e);
    std::vector<mpq_class> col(n + 2);
    for (auto v : e) col[v - 1] = edge ? -1 : 1;
    col[n] = edge ? 1 : -1;
    col[n + 1] = edge ? 1 : 0;
    columns.push_back(std::move(col));
    subset_list.push_back(std::move(e));
    is_edge.push_back(edge);
    return true;
  });
  std::vector<mpq_class> rhs(n + 2);
  rhs[n + 1] = 1;

  PhaseOne lp(std::move(columns), std::move(rhs));
  lp.solve();

  FeasibilityVerdict verdict;
  if (sgn(lp.value()) == 0) {
    std::vector<mpq_class> y(subset_list.size());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = lp.structural_value(j);
    const mpz_class scale = common_denominator(y);
    FarkasCertificate cert;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const mpq_class w = y[j] * scale;
      cert.terms.push_back({subset_list[j], is_edge[j], w.get_num()});
    }
    if (!check_farkas_certificate(h, cert)) {
      throw std::logic_error("t2_feasibility: produced an invalid infeasibility certificate");
    }
    verdict.feasible = false;
    verdict.certificate = std::move(cert);
    return verdict;
  }

  // Positive optimum: the multipliers (x, t) satisfy A x <= t b with t > 0.
  std::vector<mpq_class> scaled(n + 1);
  const mpq_class t = lp.multiplier(n + 1);
  for (unsigned r = 0; r <= n; ++r) scaled[r] = lp.multiplier(r) / t;
  const mpz_class scale = common_denominator(scaled);
  Labeling labels;
  for (unsigned r = 0; r < n; ++r) labels.c.push_back(mpq_class(scaled[r] * scale).get_num());
  labels.tau = mpq_class(scaled[n] * scale).get_num();
  if (!verify_t2(h, labels, Guard::bypass).holds) {
    throw std::logic_error("t2_feasibility: produced a labeling that fails T2");
  }
  verdict.feasible = true;
  verdict.witness = std::move(labels);
  return verdict;
}

bool check_farkas_certificate(const Hypergraph& h, const FarkasCertificate& cert) {
  const auto k = h.uniformity();
  if (!k) return false;
  const auto n = h.vertex_count();
  std::vector<mpz_class> balance(n);
  mpz_class tau_balance;
  mpz_class edge_weight;
  for (const auto& term : cert.terms) {
    if (sgn(term.weight) < 0) return false;
    if (term.subset.size() != static_cast<std::size_t>(*k)) return false;
    for (std::size_t i = 0; i < term.subset.size(); ++i) {
      const auto v = term.subset[i];
      if (v < 1 || v > n || (i > 0 && term.subset[i - 1] >= v)) return false;
    }
    if (h.contains_edge(term.subset) != term.is_edge) return false;
    const int sign = term.is_edge ? 1 : -1;
    for (auto v : term.subset) balance[v - 1] += sign * term.weight;
    tau_balance += sign * term.weight;
    if (term.is_edge) edge_weight += term.weight;
  }
  for (const auto& b : balance) {
    if (sgn(b) != 0) return false;
  }
  return sgn(tau_balance) == 0 && sgn(edge_weight) > 0;
}

}  // namespace antireg
