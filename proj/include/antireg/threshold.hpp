#ifndef ANTIREG_THRESHOLD_HPP
#define ANTIREG_THRESHOLD_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "antireg/building_string.hpp"
#include "antireg/errors.hpp"
#include "antireg/hypergraph.hpp"

namespace antireg {

/// Vertex labels c(1..n) and a threshold tau. A k-uniform hypergraph is
/// T2-threshold under (c, tau) when a k-subset is an edge exactly when its
/// label sum exceeds tau.
struct Labeling {
  std::vector<mpz_class> c;
  mpz_class tau;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Label/threshold construction for {0,1}-constructable hypergraphs.
///
/// The prefix 0^s 1 gets c = 2 on the zeros, 3 on the one, tau = 2k. Each
/// further bit extends the labeling from (c', tau'):
///   '1': c(m+1) = tau' + 1 - (sum of the k-1 smallest isolated labels);
///        tau unchanged.
///   '0': all labels double; c(m+1) = 2tau' + 1 - 2(sum over the last k-1
///        dominating vertices, topped up with vertices 1, 2, ... when fewer
///        exist); tau = 2tau' + 1.
/// Throws std::invalid_argument for a string without a '1'.
Labeling algorithm1_labels(const BuildingString& b);

/// All labels 0 with tau = k: the trivial labeling of an edgeless
/// k-uniform hypergraph.
Labeling edgeless_labeling(std::size_t n, int k);

struct T2Verdict {
  bool holds = true;
  std::optional<Edge> witness;  // lexicographically first misclassified k-subset
};

/// Enumerates every k-subset. Requires k-uniform h and |c| = n
/// (std::invalid_argument); GuardExceeded for n > 24.
T2Verdict verify_t2(const Hypergraph& h, const Labeling& labels, Guard guard = Guard::enforce);

struct T3Verdict {
  bool holds = true;
  std::optional<std::pair<Vertex, Vertex>> witness;  // first incomparable pair
};

/// x ≪ y when y can replace x in every edge containing x but not y.
/// T3 holds when every pair is comparable. GuardExceeded for n > 20.
T3Verdict verify_t3(const Hypergraph& h, Guard guard = Guard::enforce);

struct Interval {
  std::size_t lo;
  std::size_t hi;
  bool bit;
  bool trivial() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Maximal runs of equal bits, left to right.
struct IntervalDecomposition {
  std::vector<Interval> runs;
  std::vector<Interval> zero_intervals;
  std::vector<Interval> one_intervals;
};

IntervalDecomposition intervals(const BuildingString& b);

/// Ordering facts about labelings produced by algorithm1_labels.
enum class MonotonicityClause {
  ones_increase_across_intervals,
  ones_constant_within_interval,
  leading_zeros_constant,
  later_zeros_decrease_across_intervals,
  later_zeros_increase_within_interval,
  dominating_above_isolated,
};

std::string_view to_string(MonotonicityClause clause);

struct MonotonicityVerdict {
  bool holds = true;
  std::optional<MonotonicityClause> violated;
  std::optional<std::pair<Vertex, Vertex>> witness;
};

MonotonicityVerdict check_label_monotonicity(const BuildingString& b, const Labeling& labels);

}  // namespace antireg

#endif  // ANTIREG_THRESHOLD_HPP
