#include "antireg/threshold.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "antireg/combinatorics.hpp"

namespace antireg {

namespace {

constexpr std::size_t kT2Guard = 24;
constexpr std::size_t kT3Guard = 20;

int require_uniform(const Hypergraph& h, const char* op) {
  const auto k = h.uniformity();
  if (!k) throw std::invalid_argument(std::string(op) + ": hypergraph must be k-uniform");
  return *k;
}

}  // namespace

Labeling algorithm1_labels(const BuildingString& b) {
  if (!b.has_dominating()) {
    throw std::invalid_argument(
        "algorithm1_labels: string has no dominating vertex, so no threshold is defined");
  }
  const auto k = static_cast<std::size_t>(b.k());
  const std::size_t s = b.leading_zeros();

  Labeling out;
  out.c.assign(s, mpz_class(2));
  out.c.emplace_back(3);
  out.tau = 2 * b.k();

  std::vector<std::size_t> isolated(s);  // 0-based indices, in position order
  std::iota(isolated.begin(), isolated.end(), 0);
  std::vector<std::size_t> dominating{s};

  for (std::size_t idx = s + 1; idx < b.size(); ++idx) {
    if (b.dominating(idx + 1)) {
      // k-1 smallest isolated labels; ties go to the lower index.
      std::vector<std::size_t> pick = isolated;
      std::stable_sort(pick.begin(), pick.end(),
                       [&](std::size_t x, std::size_t y) { return out.c[x] < out.c[y]; });
      mpz_class sum;
      for (std::size_t j = 0; j < k - 1; ++j) sum += out.c[pick[j]];
      out.c.push_back(out.tau + 1 - sum);
      dominating.push_back(idx);
    } else {
      mpz_class sum;
      if (dominating.size() >= k - 1) {
        for (auto it = dominating.end() - static_cast<long>(k - 1); it != dominating.end(); ++it) {
          sum += out.c[*it];
        }
      } else {
        for (auto j : dominating) sum += out.c[j];
        for (std::size_t j = 0; j < k - 1 - dominating.size(); ++j) sum += out.c[j];
      }
      for (auto& label : out.c) label *= 2;
      out.c.push_back(2 * out.tau + 1 - 2 * sum);
      out.tau = 2 * out.tau + 1;
      isolated.push_back(idx);
    }
  }
  return out;
}

Labeling edgeless_labeling(std::size_t n, int k) {
  return Labeling{std::vector<mpz_class>(n), mpz_class(k)};
}

T2Verdict verify_t2(const Hypergraph& h, const Labeling& labels, Guard guard) {
  const int k = require_uniform(h, "verify_t2");
  const auto n = h.vertex_count();
  if (labels.c.size() != n) {
    throw std::invalid_argument("verify_t2: labeling has " + std::to_string(labels.c.size()) +
                                " entries for " + std::to_string(n) + " vertices");
  }
  if (n > kT2Guard && guard == Guard::enforce) {
    throw GuardExceeded("verify_t2: n = " + std::to_string(n) + " exceeds the guard n <= 24");
  }
  T2Verdict verdict;
  mpz_class sum;
  for_each_subset(static_cast<unsigned>(n), static_cast<unsigned>(k),
                  [&](const std::vector<unsigned>& s) {
                    sum = 0;
                    for (auto v : s) sum += labels.c[v - 1];
                    const Edge e(s.begin(), s.end());
                    if ((sum > labels.tau) != h.contains_edge(e)) {
                      verdict.holds = false;
                      verdict.witness = e;
                      return false;
                    }
                    return true;
                  });
  return verdict;
}

T3Verdict verify_t3(const Hypergraph& h, Guard guard) {
  const int k = require_uniform(h, "verify_t3");
  const auto n = h.vertex_count();
  if (n > kT3Guard && guard == Guard::enforce) {
    throw GuardExceeded("verify_t3: n = " + std::to_string(n) + " exceeds the guard n <= 20");
  }
  if (n > 64) throw GuardExceeded("verify_t3: hard limit n <= 64");
  const auto masks = h.edge_masks();
  const std::unordered_set<std::uint64_t> edge_set(masks.begin(), masks.end());

  std::vector<unsigned> others;
  // x ≪ y: every edge T ∪ {x} (x, y ∉ T) has T ∪ {y} as an edge too.
  auto replaceable = [&](Vertex x, Vertex y) {
    bool ok = true;
    const std::uint64_t bx = std::uint64_t{1} << (x - 1);
    const std::uint64_t by = std::uint64_t{1} << (y - 1);
    for_each_subset(static_cast<unsigned>(others.size()), static_cast<unsigned>(k - 1),
                    [&](const std::vector<unsigned>& idx) {
                      std::uint64_t t = 0;
                      for (auto i : idx) t |= std::uint64_t{1} << (others[i - 1] - 1);
                      if (edge_set.contains(t | bx) && !edge_set.contains(t | by)) {
                        ok = false;
                        return false;
                      }
                      return true;
                    });
    return ok;
  };

  T3Verdict verdict;
  for (Vertex x = 1; x <= n; ++x) {
    for (Vertex y = x + 1; y <= n; ++y) {
      others.clear();
      for (Vertex v = 1; v <= n; ++v) {
        if (v != x && v != y) others.push_back(v);
      }
      if (!replaceable(x, y) && !replaceable(y, x)) {
        verdict.holds = false;
        verdict.witness = std::make_pair(x, y);
        return verdict;
      }
    }
  }
  return verdict;
}

IntervalDecomposition intervals(const BuildingString& b) {
  IntervalDecomposition out;
  std::size_t lo = 1;
  for (std::size_t pos = 1; pos <= b.size(); ++pos) {
    if (pos == b.size() || b.dominating(pos + 1) != b.dominating(pos)) {
      const Interval run{lo, pos, b.dominating(pos)};
      out.runs.push_back(run);
      (run.bit ? out.one_intervals : out.zero_intervals).push_back(run);
      lo = pos + 1;
    }
  }
  return out;
}

std::string_view to_string(MonotonicityClause clause) {
  switch (clause) {
    case MonotonicityClause::ones_increase_across_intervals:
      return "ones_increase_across_intervals";
    case MonotonicityClause::ones_constant_within_interval:
      return "ones_constant_within_interval";
    case MonotonicityClause::leading_zeros_constant:
      return "leading_zeros_constant";
    case MonotonicityClause::later_zeros_decrease_across_intervals:
      return "later_zeros_decrease_across_intervals";
    case MonotonicityClause::later_zeros_increase_within_interval:
      return "later_zeros_increase_within_interval";
    case MonotonicityClause::dominating_above_isolated:
      return "dominating_above_isolated";
  }
  return "unknown";
}

namespace {

class MonotonicityChecker {
 public:
  MonotonicityChecker(const std::vector<mpz_class>& c) : c_(c) {}

  const MonotonicityVerdict& verdict() const { return verdict_; }
  bool failed() const { return !verdict_.holds; }

  // Consecutive labels inside iv strictly increase, or are all equal.
  void within(const Interval& iv, bool strictly_increasing, MonotonicityClause clause) {
    for (std::size_t p = iv.lo; p < iv.hi && !failed(); ++p) {
      const auto& a = c_[p - 1];
      const auto& b = c_[p];
      if (strictly_increasing ? !(a < b) : a != b) fail(clause, p, p + 1);
    }
  }

  // Every label in `low` is below every label in `high`.
  void below(const Interval& low, const Interval& high, MonotonicityClause clause) {
    if (failed()) return;
    const auto hi_of_low = argmax(low);
    const auto lo_of_high = argmin(high);
    if (!(c_[hi_of_low - 1] < c_[lo_of_high - 1])) fail(clause, hi_of_low, lo_of_high);
  }

  void fail(MonotonicityClause clause, std::size_t a, std::size_t b) {
    verdict_.holds = false;
    verdict_.violated = clause;
    verdict_.witness = std::make_pair(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }

  std::size_t argmax(const Interval& iv) const {
    std::size_t best = iv.lo;
    for (std::size_t p = iv.lo + 1; p <= iv.hi; ++p) {
      if (c_[p - 1] > c_[best - 1]) best = p;
    }
    return best;
  }

  std::size_t argmin(const Interval& iv) const {
    std::size_t best = iv.lo;
    for (std::size_t p = iv.lo + 1; p <= iv.hi; ++p) {
      if (c_[p - 1] < c_[best - 1]) best = p;
    }
    return best;
  }

 private:
  const std::vector<mpz_class>& c_;
  MonotonicityVerdict verdict_;
};

}  // namespace

MonotonicityVerdict check_label_monotonicity(const BuildingString& b, const Labeling& labels) {
  if (labels.c.size() != b.size()) {
    throw std::invalid_argument("check_label_monotonicity: labeling length differs from string");
  }
  const auto dec = intervals(b);
  MonotonicityChecker check(labels.c);
  using C = MonotonicityClause;

  const auto& ones = dec.one_intervals;
  for (std::size_t i = 0; i < ones.size(); ++i) {
    check.within(ones[i], false, C::ones_constant_within_interval);
  }
  for (std::size_t i = 0; i + 1 < ones.size(); ++i) {
    check.below(ones[i], ones[i + 1], C::ones_increase_across_intervals);
  }

  const auto& zeros = dec.zero_intervals;
  if (!zeros.empty() && zeros.front().lo == 1) {
    check.within(zeros.front(), false, C::leading_zeros_constant);
  }
  const std::size_t first_later = !zeros.empty() && zeros.front().lo == 1 ? 1 : 0;
  for (std::size_t i = first_later; i < zeros.size(); ++i) {
    check.within(zeros[i], true, C::later_zeros_increase_within_interval);
  }
  for (std::size_t i = first_later; i + 1 < zeros.size(); ++i) {
    check.below(zeros[i + 1], zeros[i], C::later_zeros_decrease_across_intervals);
  }

  if (!check.failed() && !ones.empty() && !zeros.empty()) {
    std::size_t top_isolated = zeros.front().lo;
    for (const auto& iv : zeros) {
      const auto p = check.argmax(iv);
      if (labels.c[p - 1] > labels.c[top_isolated - 1]) top_isolated = p;
    }
    std::size_t low_dominating = ones.front().lo;
    for (const auto& iv : ones) {
      const auto p = check.argmin(iv);
      if (labels.c[p - 1] < labels.c[low_dominating - 1]) low_dominating = p;
    }
    if (!(labels.c[top_isolated - 1] < labels.c[low_dominating - 1])) {
      check.fail(C::dominating_above_isolated, top_isolated, low_dominating);
    }
  }
  return check.verdict();
}

}  // namespace antireg
