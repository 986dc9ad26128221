// Acceptance run: one line per criterion, nonzero exit if any fails or
// exceeds its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "antireg/alpha_beta.hpp"
#include "antireg/building_string.hpp"
#include "antireg/cli.hpp"
#include "antireg/combinatorics.hpp"
#include "antireg/feasibility.hpp"
#include "antireg/hypergraph.hpp"
#include "antireg/ipoly.hpp"
#include "antireg/threshold.hpp"
#include "json.hpp"

using namespace antireg;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0: no limit
  std::function<Outcome()> body;
};

Hypergraph h1() { return {5, {{1, 4, 5}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}}, 3}; }
Hypergraph h2() { return {5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5}}, 3}; }

std::string key(int k, std::size_t n, bool connected) {
  return "k=" + std::to_string(k) + " n=" + std::to_string(n) + (connected ? " connected" : " disconnected");
}

Outcome label_fidelity() {
  Outcome o;
  const std::vector<std::pair<std::string, json>> cases{
      {"0010100011101", {"64", "64", "96", "48", "112", "8", "12", "14", "204", "204", "204", "-185", "401"}},
      {"0010101010101", {"64", "64", "96", "48", "112", "8", "168", "-60", "276", "-222", "506", "-559", "1005"}},
  };
  for (const auto& [bits, c] : cases) {
    std::ostringstream out, err;
    const int code = cli::run({"label", "--string", bits, "--k", "3"}, out, err);
    if (code != 0) {
      o.fail("label " + bits + " exited " + std::to_string(code));
      continue;
    }
    const auto j = json::parse(out.str());
    if (j["c"] != c || j["tau"] != "223") o.fail("label " + bits + " printed " + j.dump());
  }
  return o;
}

Outcome shared_polynomial() {
  Outcome o;
  const Polynomial want{1, 5, 10, 6, 1};
  for (const auto& [name, h] : {std::pair{"H1", h1()}, std::pair{"H2", h2()}}) {
    if (ipoly_bruteforce(h) != want) o.fail(std::string(name) + " brute = " + ipoly_bruteforce(h).to_string());
    if (ipoly_trinks(h) != want) o.fail(std::string(name) + " trinks = " + ipoly_trinks(h).to_string());
  }
  return o;
}

Outcome four_way_agreement() {
  Outcome o;
  int instances = 0;
  for (int k = 2; k <= 5; ++k) {
    for (std::size_t n = 1; n <= 14; ++n) {
      for (bool connected : {false, true}) {
        if (connected && n < static_cast<std::size_t>(k)) continue;
        ++instances;
        const auto h = build_hypergraph(antiregular_string(n, k, connected));
        const auto brute = ipoly_bruteforce(h);
        if (ipoly_trinks(h) != brute) o.fail("trinks differs at " + key(k, n, connected));
        if (ipoly_antiregular_recurrence(n, k, connected) != brute) {
          o.fail("recurrence differs at " + key(k, n, connected));
        }
        if (n >= static_cast<std::size_t>(k) + 1 && ipoly_semiclosed(n, k, connected) != brute) {
          o.fail("semi-closed differs at " + key(k, n, connected));
        }
        if (k == 3 && ipoly_k3_closed(n, connected) != brute) {
          o.fail("closed form differs at " + key(k, n, connected));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(instances) + " instances";
  return o;
}

Outcome correction_tables() {
  Outcome o;
  const auto a3 = solve_alpha(3, 20);
  for (const auto& [level, row] : a3.levels) {
    if (row[0] != 3 || row[1] != level + 3 || row[2] != level) {
      o.fail("k=3 alpha row at level " + std::to_string(level));
    }
  }
  const auto a2 = solve_alpha(2, 20);
  for (const auto& [level, row] : a2.levels) {
    if (row[0] != 1 || row[1] != 1) o.fail("k=2 alpha row at level " + std::to_string(level));
  }
  for (int k = 2; k <= 6; ++k) {
    try {
      const auto alpha = solve_alpha(k, 20);  // levels 0..40
      const auto beta = solve_beta(k, 19);    // levels 1..39
      for (const auto* t : {&alpha, &beta}) {
        for (const auto& [level, row] : t->levels) {
          if (row[k - 1] != binomial(level, k - 2)) o.fail("boundary row at k=" + std::to_string(k));
        }
      }
    } catch (const std::logic_error& e) {
      o.fail(e.what());
    }
  }
  return o;
}

Outcome coefficient_sums() {
  Outcome o;
  for (int k = 3; k <= 6; ++k) {
    for (std::size_t n = 1; 2 * n <= 20; ++n) {
      const auto p = ipoly_antiregular_recurrence(2 * n, k, false);
      CoefficientPair cf;
      try {
        cf = coeff_formulas(k, n);
      } catch (const std::logic_error& e) {
        o.fail(e.what());
        continue;
      }
      if (cf.a_k != p.coefficient(static_cast<std::size_t>(k)) ||
          cf.a_k_plus_1 != p.coefficient(static_cast<std::size_t>(k) + 1)) {
        o.fail("coefficients differ at " + key(k, 2 * n, false));
      }
      if (k == 3) {
        const mpz_class m(static_cast<unsigned long>(n));
        if (m * (m - 1) * (4 * m + 1) != 6 * p.coefficient(3) ||
            m * m * (m - 1) * (m - 2) != 6 * p.coefficient(4)) {
          o.fail("k=3 product form differs at n=" + std::to_string(n));
        }
      }
    }
  }
  return o;
}

Outcome log_concavity() {
  Outcome o;
  for (int k = 2; k <= 6; ++k) {
    for (std::size_t n = 1; n <= 40; ++n) {
      for (bool connected : {false, true}) {
        if (connected && n < static_cast<std::size_t>(k)) continue;
        const auto r = is_log_concave(ipoly_antiregular_recurrence(n, k, connected));
        if (!r.holds) o.fail("violation at i=" + std::to_string(*r.first_violation) + ", " + key(k, n, connected));
      }
    }
  }
  return o;
}

Outcome t2_soundness() {
  Outcome o;
  std::size_t strings = 0;
  for (int k = 2; k <= 5; ++k) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const std::size_t free = n >= static_cast<std::size_t>(k) ? n - k + 1 : 0;
      for (std::uint64_t suffix = 0; suffix < (std::uint64_t{1} << free); ++suffix) {
        std::string bits(n, '0');
        for (std::size_t j = 0; j < free; ++j) {
          if ((suffix >> j) & 1) bits[k - 1 + j] = '1';
        }
        ++strings;
        const BuildingString b(k, bits);
        const auto h = build_hypergraph(b);
        if (!b.has_dominating()) {
          if (!verify_t2(h, edgeless_labeling(n, k)).holds) o.fail("edgeless labeling fails for " + bits);
          continue;
        }
        const auto l = algorithm1_labels(b);
        if (!verify_t2(h, l).holds) o.fail("T2 fails for k=" + std::to_string(k) + " " + bits);
        const auto m = check_label_monotonicity(b, l);
        if (!m.holds) o.fail(std::string(to_string(*m.violated)) + " fails for " + bits);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(strings) + " strings";
  return o;
}

Outcome degree_multiset() {
  Outcome o;
  for (int k = 3; k <= 5; ++k) {
    for (std::size_t n = static_cast<std::size_t>(k) + 1; n <= 14; ++n) {
      for (bool connected : {false, true}) {
        const auto m = degree_sequence(build_hypergraph(antiregular_string(n, k, connected))).multiplicities();
        std::size_t repeated = 0;
        bool right_count = true;
        for (const auto& [value, count] : m) {
          if (count > 1) {
            ++repeated;
            right_count = right_count && count == static_cast<std::size_t>(k);
          }
        }
        if (repeated != 1 || !right_count) o.fail("degree multiset wrong at " + key(k, n, connected));
      }
    }
  }
  const auto d = degree_sequence(build_hypergraph(BuildingString(4, "000010"))).degrees;
  if (d != std::vector<std::size_t>{3, 3, 3, 3, 4, 0}) o.fail("000010 degree sequence");
  return o;
}

Outcome negative_results() {
  Outcome o;
  const auto f = t2_feasibility(h2());
  if (f.feasible) o.fail("H2 reported T2-feasible");
  else if (!check_farkas_certificate(h2(), *f.certificate)) o.fail("H2 certificate does not check");
  const Hypergraph signed_sum(6, {{1, 2, 5, 6}, {1, 3, 4, 6}, {1, 3, 5, 6}, {1, 4, 5, 6}}, 4);
  if (recognize_zero_one_constructable(signed_sum)) o.fail("4-graph recognized as constructable");
  const Hypergraph triples(6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}}, 3);
  if (recognize_zero_one_constructable(triples)) o.fail("([6],{123,345,156}) recognized as constructable");
  return o;
}

Outcome complement_structure() {
  Outcome o;
  for (int k = 2; k <= 5; ++k) {
    for (std::size_t n = static_cast<std::size_t>(k); n <= 12; ++n) {
      const auto a = build_hypergraph(antiregular_string(n, k, true));
      const auto abar = build_hypergraph(antiregular_string(n, k, false));
      if (complement_uniform(a).edges() != abar.edges()) o.fail("complement of A at " + key(k, n, true));
      if (complement_uniform(abar).edges() != a.edges()) o.fail("complement of Ā at " + key(k, n, false));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construction labels for the two 13-vertex words (CLI label)", 1, label_fidelity},
      {2, "H1/H2 polynomial by brute force and recursion", 1, shared_polynomial},
      {3, "four-way polynomial agreement, k<=5, n<=14", 120, four_way_agreement},
      {4, "alpha/beta tables and level constancy, k<=6, levels<=40", 0, correction_tables},
      {5, "coefficient sums a_k, a_{k+1}, k in 3..6, 2n<=20", 30, coefficient_sums},
      {6, "log-concavity, k in 2..6, n<=40", 60, log_concavity},
      {7, "T2 soundness and label monotonicity, k<=5, n<=12", 300, t2_soundness},
      {8, "antiregular degree multiset, k in 3..5, n<=14", 10, degree_multiset},
      {9, "negative results (H2 infeasible, two non-constructable graphs)", 10, negative_results},
      {10, "complement structure, k<=5, n<=12", 30, complement_structure},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    if (!in_time) o.fail("over time budget");
    if (!o.ok) ++failures;

    char timing[96];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", seconds, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    }
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << '\n';
  }

  // Smallest vertex count per (k, connectivity, parity) at which the
  // semi-closed forms start agreeing with the recurrence.
  std::cout << "\nsemi-closed validity floor (searched to n = 40; guarded range is n >= k+1):\n";
  for (int k = 2; k <= 6; ++k) {
    std::cout << "  k=" << k << ':';
    for (bool connected : {false, true}) {
      for (int parity : {0, 1}) {
        const auto f = semiclosed_validity_floor(k, connected, parity, 40);
        std::cout << "  " << (connected ? "A" : "Ā") << (parity ? "_odd" : "_even") << " >= "
                  << (f ? std::to_string(*f) : std::string("none"));
      }
    }
    std::cout << '\n';
  }

  std::cout << (failures == 0 ? "all criteria passed\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
