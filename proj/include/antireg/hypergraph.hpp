#ifndef ANTIREG_HYPERGRAPH_HPP
#define ANTIREG_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "antireg/building_string.hpp"
#include "antireg/errors.hpp"

namespace antireg {

using Vertex = unsigned;            // 1-based
using Edge = std::vector<Vertex>;   // strictly increasing

/// A finite hypergraph on vertices {1..n}.
///
/// Edges are stored canonically: each edge is a strictly increasing vertex
/// list, the edge list is sorted lexicographically and duplicate-free.
/// Edges may have any size, including zero (the empty edge, which no vertex
/// set avoids, so such a hypergraph has no independent sets).
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Canonicalizes the edge list. Uniformity is taken from `k` when given
  /// (every edge must then have exactly k vertices), and otherwise inferred
  /// from the edges when they all share one size.
  /// Throws std::invalid_argument on out-of-range vertices, repeated vertices
  /// inside an edge, or a uniformity mismatch.
  Hypergraph(std::size_t n, std::vector<Edge> edges, std::optional<int> k = std::nullopt);

  static Hypergraph edgeless(std::size_t n, std::optional<int> k = std::nullopt);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<int> uniformity() const { return k_; }

  bool contains_edge(const Edge& e) const;
  bool has_empty_edge() const { return !edges_.empty() && edges_.front().empty(); }

  /// Edge i as a bitmask, bit (v-1) for vertex v. Requires n <= 64.
  std::vector<std::uint64_t> edge_masks() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::optional<int> k_;
};

struct DegreeSequence {
  std::vector<std::size_t> degrees;  // degrees[i] is the degree of vertex i+1

  /// (degree value, how many vertices have it), ascending by value.
  std::vector<std::pair<std::size_t, std::size_t>> multiplicities() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// How hide_vertex treats edges that become supersets of other edges.
enum class SupersetPolicy { prune, keep };

/// Adds vertices in string order. Bit 1 at position m+1 contributes every
/// edge {m+1} ∪ S with S a (k-1)-subset of {1..m}. The result is k-uniform.
Hypergraph build_hypergraph(const BuildingString& b);

/// Edge set becomes all k-subsets of {1..n} not in E(H).
/// Throws std::invalid_argument unless H declares uniformity k.
Hypergraph complement_uniform(const Hypergraph& h);

/// Vertices of h2 are shifted by |V(h1)|.
Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2);

/// Generalized Zykov k-sum: adds {v} ∪ W for v in V(h1) and W a (k-1)-subset
/// of V(h2). Vertices of h2 are shifted by |V(h1)|.
/// Throws std::invalid_argument if |V(h2)| < k-1 or k < 2.
Hypergraph zykov_k_sum(const Hypergraph& h1, const Hypergraph& h2, int k);

/// Removes v and every edge containing it; relabels order-preservingly.
Hypergraph delete_vertex(const Hypergraph& h, Vertex v);

/// Removes v from the vertex set and from every edge containing it.
/// Duplicates collapse; with SupersetPolicy::prune, edges that contain
/// another edge are dropped (they never affect independence).
Hypergraph hide_vertex(const Hypergraph& h, Vertex v,
                       SupersetPolicy policy = SupersetPolicy::prune);

DegreeSequence degree_sequence(const Hypergraph& h);

/// A successful recognition: build_hypergraph(string) with vertex i mapped
/// to order[i-1] reproduces the input edge set exactly.
struct Recognition {
  BuildingString string;
  std::vector<Vertex> order;
};

/// Decides whether a k-uniform hypergraph is {0,1}-constructable by peeling
/// vertices from the end with full backtracking. A vertex peels as isolated
/// when it has degree 0, and as dominating when every k-subset of the
/// remaining vertices that contains it is an edge. Higher labels are tried
/// first, so build_hypergraph(b) is recognized as b with the identity order.
/// Throws std::invalid_argument for non-uniform input and GuardExceeded when
/// n > 20 under Guard::enforce.
std::optional<Recognition> recognize_zero_one_constructable(const Hypergraph& h,
                                                            Guard guard = Guard::enforce);

/// Relabels vertex i to perm[i-1]. perm must be a permutation of {1..n}.
Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm);

}  // namespace antireg

#endif  // ANTIREG_HYPERGRAPH_HPP
