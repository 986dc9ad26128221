#include "antireg/ipoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "antireg/alpha_beta.hpp"
#include "antireg/combinatorics.hpp"

namespace antireg {

namespace {

constexpr std::size_t kBruteforceGuard = 24;
constexpr std::size_t kTrinksGuard = 40;

void check_guard(std::size_t n, std::size_t cap, Guard guard, const char* op) {
  if (n > cap && guard == Guard::enforce) {
    throw GuardExceeded(std::string(op) + ": n = " + std::to_string(n) + " exceeds the guard n <= " +
                        std::to_string(cap));
  }
}

// x * Σ_{j=0}^{k-2} C(m, j) x^j: the hidden part contributed by a dominating
// vertex added on top of m earlier vertices.
Polynomial dominating_increment(std::size_t m, int k) {
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(k));
  for (int i = 1; i <= k - 1; ++i) coeffs[i] = binomial(static_cast<long>(m), i - 1);
  return Polynomial(std::move(coeffs));
}

struct MaskKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : key) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class TrinksEngine {
 public:
  explicit TrinksEngine(TrinksOptions options) : options_(options) {}

  Polynomial solve(unsigned n, std::vector<std::uint64_t> masks) {
    canonicalize(masks);
    return recurse(n, masks);
  }

 private:
  void canonicalize(std::vector<std::uint64_t>& masks) const {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (options_.superset_policy == SupersetPolicy::keep || masks.size() < 2) return;
    std::vector<std::uint64_t> by_size = masks;
    std::stable_sort(by_size.begin(), by_size.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint64_t> kept;
    kept.reserve(by_size.size());
    for (auto m : by_size) {
      const bool dominated = std::any_of(kept.begin(), kept.end(),
                                         [m](std::uint64_t small) { return (small & ~m) == 0; });
      if (!dominated) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    masks = std::move(kept);
  }

  Polynomial recurse(unsigned n, const std::vector<std::uint64_t>& masks) {
    // Sorted ascending, so an empty edge comes first.
    if (!masks.empty() && masks.front() == 0) return {};
    if (masks.empty()) return Polynomial::one_plus_x_pow(n);

    std::vector<std::uint64_t> key;
    if (options_.memoize) {
      key.reserve(masks.size() + 1);
      key.push_back(n);
      key.insert(key.end(), masks.begin(), masks.end());
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    std::vector<std::uint64_t> deleted;
    std::vector<std::uint64_t> hidden;
    bool singleton = false;
    for (auto m : masks) {
      if (m & top) {
        if (m == top) singleton = true;
        hidden.push_back(m & ~top);
      } else {
        deleted.push_back(m);
        hidden.push_back(m);
      }
    }

    Polynomial result = recurse(n - 1, deleted);
    if (!singleton) {
      canonicalize(hidden);
      result += recurse(n - 1, hidden).shifted(1);
    }
    if (options_.memoize) memo_.emplace(std::move(key), result);
    return result;
  }

  TrinksOptions options_;
  std::unordered_map<std::vector<std::uint64_t>, Polynomial, MaskKeyHash> memo_;
};

struct SemiclosedPieces {
  CorrectionKind kind;
  long exponent;     // power of (1+x) in front of the bracket
  int base_level;    // level of the bracketed correction row
  int level;         // level of the subtracted correction row
  bool connected;    // add the dominating increment on top of level vertices
};

// Selects the formula family for vertex count n.
SemiclosedPieces semiclosed_pieces(std::size_t n, int k, bool connected) {
  const long big_n = static_cast<long>(n);
  const bool k_odd = k % 2 == 1;
  SemiclosedPieces p{};
  p.connected = connected;
  if (!connected && n % 2 == 0) {
    // Ā_{2m}
    const long m = big_n / 2;
    p.kind = CorrectionKind::alpha;
    p.exponent = k_odd ? m - (k - 1) / 2 : m - k / 2;
    p.base_level = k_odd ? k - 1 : k;
    p.level = static_cast<int>(2 * m);
  } else if (connected && n % 2 == 1) {
    // A_{2m-1}
    const long m = (big_n + 1) / 2;
    p.kind = CorrectionKind::alpha;
    p.exponent = k_odd ? m - 1 - (k - 1) / 2 : m - 1 - k / 2;
    p.base_level = k_odd ? k - 1 : k;
    p.level = static_cast<int>(2 * m - 2);
  } else if (!connected) {
    // Ā_{2m-1}
    const long m = (big_n + 1) / 2;
    p.kind = CorrectionKind::beta;
    p.exponent = k_odd ? m - 1 - (k - 1) / 2 : m - k / 2;
    p.base_level = k_odd ? k : k - 1;
    p.level = static_cast<int>(2 * m - 1);
  } else {
    // A_{2m}
    const long m = big_n / 2;
    p.kind = CorrectionKind::beta;
    p.exponent = k_odd ? m - 1 - (k - 1) / 2 : m - k / 2;
    p.base_level = k_odd ? k : k - 1;
    p.level = static_cast<int>(2 * m - 1);
  }
  return p;
}

Polynomial correction_row(const AlphaBetaTable& table, int level) {
  std::vector<mpz_class> coeffs;
  for (int i = 0; i < table.k; ++i) coeffs.push_back(table.at(level, i));
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial ipoly_bruteforce(const Hypergraph& h, Guard guard) {
  const auto n = h.vertex_count();
  check_guard(n, kBruteforceGuard, guard, "ipoly_bruteforce");
  if (n > 40) throw GuardExceeded("ipoly_bruteforce: hard limit n <= 40");
  const auto masks = h.edge_masks();
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < total; ++w) {
    const bool independent =
        std::none_of(masks.begin(), masks.end(), [w](std::uint64_t e) { return (e & ~w) == 0; });
    if (independent) ++counts[std::popcount(w)];
  }
  std::vector<mpz_class> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return Polynomial(std::move(coeffs));
}

Polynomial ipoly_trinks(const Hypergraph& h, Guard guard, TrinksOptions options) {
  const auto n = h.vertex_count();
  check_guard(n, kTrinksGuard, guard, "ipoly_trinks");
  if (n > 64) throw GuardExceeded("ipoly_trinks: hard limit n <= 64");
  TrinksEngine engine(options);
  return engine.solve(static_cast<unsigned>(n), h.edge_masks());
}

Polynomial ipoly_antiregular_recurrence(std::size_t n, int k, bool connected) {
  if (n < 1) throw std::invalid_argument("ipoly_antiregular_recurrence: n must be at least 1");
  if (k < 2) throw std::invalid_argument("ipoly_antiregular_recurrence: k must be at least 2");
  const auto uk = static_cast<std::size_t>(k);
  Polynomial conn = Polynomial::one_plus_x_pow(0);
  Polynomial disc = conn;
  for (std::size_t vertices = 1; vertices <= n; ++vertices) {
    if (vertices <= uk - 1) {
      conn = disc = Polynomial::one_plus_x_pow(vertices);
      continue;
    }
    Polynomial next_disc = Polynomial{1, 1} * conn;
    Polynomial next_conn = disc + dominating_increment(vertices - 1, k);
    conn = std::move(next_conn);
    disc = std::move(next_disc);
  }
  return connected ? conn : disc;
}

Polynomial ipoly_k3_closed(std::size_t n, bool connected) {
  if (n < 1) throw std::invalid_argument("ipoly_k3_closed: n must be at least 1");
  auto pow = [](long e) { return Polynomial::one_plus_x_pow(static_cast<std::size_t>(e)); };
  const Polynomial one_plus_x{1, 1};
  const long big_n = static_cast<long>(n);
  if (connected && n % 2 == 1) {
    // A_{2m-1} = 3(1+x)^m + (1+x)^{m-1} - 2mx - 3
    const long m = (big_n + 1) / 2;
    return pow(m) * mpz_class(3) + pow(m - 1) - Polynomial{3, 2 * m};
  }
  if (!connected && n % 2 == 0) {
    // Ā_{2m} = 3(1+x)^{m+1} + (1+x)^m - (1+x)(2mx + 3)
    const long m = big_n / 2;
    return pow(m + 1) * mpz_class(3) + pow(m) - one_plus_x * Polynomial{3, 2 * m};
  }
  if (!connected) {
    // Ā_{2m-1} = (1+x)^{m+1} + 3(1+x)^m - (1+x)((2m-1)x + 3)
    const long m = (big_n + 1) / 2;
    return pow(m + 1) + pow(m) * mpz_class(3) - one_plus_x * Polynomial{3, 2 * m - 1};
  }
  // A_{2m} = (1+x)^{m+1} + 3(1+x)^m - (2m+1)x - 3
  const long m = big_n / 2;
  return pow(m + 1) + pow(m) * mpz_class(3) - Polynomial{3, 2 * m + 1};
}

std::optional<Polynomial> ipoly_semiclosed_unguarded(std::size_t n, int k, bool connected) {
  if (n < 1) throw std::invalid_argument("ipoly_semiclosed: n must be at least 1");
  if (k < 2) throw std::invalid_argument("ipoly_semiclosed: k must be at least 2");
  const auto p = semiclosed_pieces(n, k, connected);
  if (p.exponent < 0 || p.level < 0) return std::nullopt;

  const int top_level = std::max(p.level, p.base_level);
  const int min_n_max = (k + 2) / 2;
  const int n_max = std::max(min_n_max, (top_level + 1) / 2);
  const auto table = p.kind == CorrectionKind::alpha ? solve_alpha(k, n_max) : solve_beta(k, n_max);

  Polynomial bracket = Polynomial::one_plus_x_pow(static_cast<std::size_t>(p.base_level)) +
                       correction_row(table, p.base_level);
  Polynomial result = Polynomial::one_plus_x_pow(static_cast<std::size_t>(p.exponent)) * bracket -
                      correction_row(table, p.level);
  if (p.connected) result += dominating_increment(static_cast<std::size_t>(p.level), k);
  return result;
}

Polynomial ipoly_semiclosed(std::size_t n, int k, bool connected) {
  if (k < 2) throw std::invalid_argument("ipoly_semiclosed: k must be at least 2");
  if (n < static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("ipoly_semiclosed: vertex count " + std::to_string(n) +
                                " below the validity range n >= k+1 = " + std::to_string(k + 1));
  }
  auto p = ipoly_semiclosed_unguarded(n, k, connected);
  if (!p) throw std::logic_error("ipoly_semiclosed: formula undefined inside its validity range");
  return *p;
}

std::optional<std::size_t> semiclosed_validity_floor(int k, bool connected, int parity,
                                                     std::size_t search_limit) {
  std::size_t top = search_limit;
  if (top % 2 != static_cast<std::size_t>(parity)) {
    if (top == 0) return std::nullopt;
    --top;
  }
  std::optional<std::size_t> floor;
  for (std::size_t n = top; n >= 1; n -= 2) {
    const auto formula = ipoly_semiclosed_unguarded(n, k, connected);
    if (!formula || *formula != ipoly_antiregular_recurrence(n, k, connected)) break;
    floor = n;
    if (n < 2) break;
  }
  return floor;
}

CoefficientPair coeff_formulas(int k, std::size_t n) {
  if (k < 2) throw std::invalid_argument("coeff_formulas: k must be at least 2");
  if (n < 1) throw std::invalid_argument("coeff_formulas: n must be at least 1");
  const long lower = (k + 1) / 2;
  const long big_n = static_cast<long>(n);
  CoefficientPair out;
  for (long i = lower; i <= big_n; ++i) out.a_k += binomial(2 * i - 1, k - 1);
  for (long i = lower; i <= big_n - 1; ++i) out.a_k_plus_1 += binomial(2 * i - 1, k - 1) * (big_n - i);
  if (k == 3) {
    const mpz_class m(big_n);
    const mpz_class a3 = m * (m - 1) * (4 * m + 1) / 6;
    const mpz_class a4 = m * m * (m - 1) * (m - 2) / 6;
    if (a3 != out.a_k || a4 != out.a_k_plus_1) {
      throw std::logic_error("coeff_formulas: k = 3 product forms disagree with the sums at n = " +
                             std::to_string(n));
    }
  }
  return out;
}

LogConcavityReport is_log_concave(const Polynomial& p) {
  const auto& a = p.coefficients();
  LogConcavityReport report;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) {
      report.holds = false;
      report.first_violation = i;
      break;
    }
  }
  return report;
}

}  // namespace antireg
