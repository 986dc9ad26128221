#ifndef ANTIREG_FEASIBILITY_HPP
#define ANTIREG_FEASIBILITY_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "antireg/errors.hpp"
#include "antireg/hypergraph.hpp"
#include "antireg/threshold.hpp"

namespace antireg {

/// Nonnegative weights on k-subsets proving that no T2 labeling exists:
/// the weighted edge sums and weighted non-edge sums use every vertex the
/// same number of times, the edge weights and non-edge weights total the
/// same, yet edges must beat tau by at least 1 each while non-edges may not
/// exceed it.
struct FarkasCertificate {
  struct Term {
    Edge subset;
    bool is_edge;
    mpz_class weight;
  };
  std::vector<Term> terms;
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::optional<Labeling> witness;                // present iff feasible
  std::optional<FarkasCertificate> certificate;  // present iff infeasible
};

/// Decides whether some (c, tau) makes h T2-threshold, by an exact rational
/// phase-one simplex on the Farkas alternative of
///   Σ_{S} c - tau >= 1  (S ∈ E),   Σ_{S} c - tau <= 0  (S ∉ E).
/// The witness is integral. GuardExceeded when C(n, k) > 5000.
FeasibilityVerdict t2_feasibility(const Hypergraph& h, Guard guard = Guard::enforce);

/// Independent check of an infeasibility certificate against h.
bool check_farkas_certificate(const Hypergraph& h, const FarkasCertificate& cert);

}  // namespace antireg

#endif  // ANTIREG_FEASIBILITY_HPP
