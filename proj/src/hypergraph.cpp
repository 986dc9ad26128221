#include "antireg/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "antireg/combinatorics.hpp"

namespace antireg {

namespace {

std::optional<int> common_edge_size(const std::vector<Edge>& edges) {
  if (edges.empty()) return std::nullopt;
  const auto size = edges.front().size();
  for (const auto& e : edges) {
    if (e.size() != size) return std::nullopt;
  }
  return static_cast<int>(size);
}

void check_vertex(const Hypergraph& h, Vertex v, const char* op) {
  if (v < 1 || v > h.vertex_count()) {
    throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(v) +
                                " out of range 1.." + std::to_string(h.vertex_count()));
  }
}

std::vector<Edge> prune_supersets(std::vector<Edge> edges) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.size() < b.size(); });
  std::vector<Edge> kept;
  for (auto& e : edges) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Edge& small) {
      return small.size() < e.size() &&
             std::includes(e.begin(), e.end(), small.begin(), small.end());
    });
    if (!dominated) kept.push_back(std::move(e));
  }
  return kept;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges, std::optional<int> k)
    : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("hypergraph: repeated vertex inside an edge");
    }
    if (!e.empty() && (e.front() < 1 || e.back() > n_)) {
      throw std::invalid_argument("hypergraph: edge vertex outside 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  if (k) {
    if (*k < 1) throw std::invalid_argument("hypergraph: uniformity must be positive");
    for (const auto& e : edges_) {
      if (e.size() != static_cast<std::size_t>(*k)) {
        throw std::invalid_argument("hypergraph: edge size differs from declared uniformity " +
                                    std::to_string(*k));
      }
    }
    k_ = k;
  } else {
    k_ = common_edge_size(edges_);
  }
}

Hypergraph Hypergraph::edgeless(std::size_t n, std::optional<int> k) { return Hypergraph(n, {}, k); }

bool Hypergraph::contains_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::uint64_t> Hypergraph::edge_masks() const {
  if (n_ > 64) throw std::invalid_argument("hypergraph: bitmask view needs n <= 64");
  std::vector<std::uint64_t> masks;
  masks.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= std::uint64_t{1} << (v - 1);
    masks.push_back(m);
  }
  return masks;
}

std::vector<std::pair<std::size_t, std::size_t>> DegreeSequence::multiplicities() const {
  std::map<std::size_t, std::size_t> counts;
  for (auto d : degrees) ++counts[d];
  return {counts.begin(), counts.end()};
}

Hypergraph build_hypergraph(const BuildingString& b) {
  const auto k = static_cast<unsigned>(b.k());
  std::vector<Edge> edges;
  for (std::size_t pos = 1; pos <= b.size(); ++pos) {
    if (!b.dominating(pos)) continue;
    const auto top = static_cast<Vertex>(pos);
    for_each_subset(top - 1, k - 1, [&](const std::vector<unsigned>& s) {
      Edge e(s.begin(), s.end());
      e.push_back(top);
      edges.push_back(std::move(e));
      return true;
    });
  }
  return Hypergraph(b.size(), std::move(edges), b.k());
}

Hypergraph complement_uniform(const Hypergraph& h) {
  const auto k = h.uniformity();
  if (!k) throw std::invalid_argument("complement_uniform: hypergraph is not uniform");
  std::vector<Edge> edges;
  for_each_subset(static_cast<unsigned>(h.vertex_count()), static_cast<unsigned>(*k),
                  [&](const std::vector<unsigned>& s) {
                    Edge e(s.begin(), s.end());
                    if (!h.contains_edge(e)) edges.push_back(std::move(e));
                    return true;
                  });
  return Hypergraph(h.vertex_count(), std::move(edges), k);
}

Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2) {
  const auto shift = static_cast<Vertex>(h1.vertex_count());
  std::vector<Edge> edges = h1.edges();
  for (Edge e : h2.edges()) {
    for (auto& v : e) v += shift;
    edges.push_back(std::move(e));
  }
  std::optional<int> k;
  const auto k1 = h1.uniformity();
  const auto k2 = h2.uniformity();
  if (k1 && k2 && *k1 == *k2) {
    k = k1;
  } else if (k1 && h2.edge_count() == 0) {
    k = k1;
  } else if (k2 && h1.edge_count() == 0) {
    k = k2;
  }
  return Hypergraph(h1.vertex_count() + h2.vertex_count(), std::move(edges), k);
}

Hypergraph zykov_k_sum(const Hypergraph& h1, const Hypergraph& h2, int k) {
  if (k < 2) throw std::invalid_argument("zykov_k_sum: k must be at least 2");
  const auto n1 = static_cast<Vertex>(h1.vertex_count());
  const auto n2 = static_cast<Vertex>(h2.vertex_count());
  if (n2 + 1 < static_cast<Vertex>(k)) {
    throw std::invalid_argument("zykov_k_sum: second operand needs at least k-1 vertices");
  }
  std::vector<Edge> edges = h1.edges();
  for (Edge e : h2.edges()) {
    for (auto& v : e) v += n1;
    edges.push_back(std::move(e));
  }
  for (Vertex v = 1; v <= n1; ++v) {
    for_each_subset(n2, static_cast<unsigned>(k - 1), [&](const std::vector<unsigned>& w) {
      Edge e{v};
      for (auto u : w) e.push_back(u + n1);
      edges.push_back(std::move(e));
      return true;
    });
  }
  const bool uniform = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return e.size() == static_cast<std::size_t>(k);
  });
  return Hypergraph(n1 + n2, std::move(edges), uniform ? std::optional<int>(k) : std::nullopt);
}

Hypergraph delete_vertex(const Hypergraph& h, Vertex v) {
  check_vertex(h, v, "delete_vertex");
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) continue;
    Edge moved = e;
    for (auto& u : moved) {
      if (u > v) --u;
    }
    edges.push_back(std::move(moved));
  }
  return Hypergraph(h.vertex_count() - 1, std::move(edges), h.uniformity());
}

Hypergraph hide_vertex(const Hypergraph& h, Vertex v, SupersetPolicy policy) {
  check_vertex(h, v, "hide_vertex");
  std::vector<Edge> edges;
  bool shrank = false;
  for (const auto& e : h.edges()) {
    Edge moved;
    moved.reserve(e.size());
    for (auto u : e) {
      if (u == v) {
        shrank = true;
        continue;
      }
      moved.push_back(u > v ? u - 1 : u);
    }
    edges.push_back(std::move(moved));
  }
  if (policy == SupersetPolicy::prune) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges = prune_supersets(std::move(edges));
  }
  return Hypergraph(h.vertex_count() - 1, std::move(edges),
                    shrank ? std::nullopt : h.uniformity());
}

DegreeSequence degree_sequence(const Hypergraph& h) {
  DegreeSequence out{std::vector<std::size_t>(h.vertex_count(), 0)};
  for (const auto& e : h.edges()) {
    for (auto v : e) ++out.degrees[v - 1];
  }
  return out;
}

Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm) {
  const auto n = h.vertex_count();
  if (perm.size() != n) throw std::invalid_argument("relabel: permutation has wrong length");
  std::vector<bool> seen(n + 1, false);
  for (auto p : perm) {
    if (p < 1 || p > n || seen[p]) throw std::invalid_argument("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (auto v : e) mapped.push_back(perm[v - 1]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(n, std::move(edges), h.uniformity());
}

namespace {

class Peeler {
 public:
  Peeler(const Hypergraph& h, unsigned k)
      : n_(static_cast<unsigned>(h.vertex_count())), k_(k), masks_(h.edge_masks()),
        bits_(n_, '0'), order_(n_, 0) {}

  bool run() { return peel((std::uint32_t{1} << n_) - 1); }

  Recognition result() const { return {BuildingString(static_cast<int>(k_), bits_), order_}; }

 private:
  bool peel(std::uint32_t remaining) {
    const auto size = static_cast<unsigned>(std::popcount(remaining));
    if (size < k_) {
      // Too few vertices for any edge: the rest are leading isolated vertices.
      unsigned pos = 0;
      for (unsigned v = 1; v <= n_; ++v) {
        if (remaining & (std::uint32_t{1} << (v - 1))) {
          order_[pos] = v;
          bits_[pos] = '0';
          ++pos;
        }
      }
      return true;
    }
    if (failed_.contains(remaining)) return false;
    const auto full = binomial_u64(size - 1, k_ - 1);
    for (unsigned v = n_; v >= 1; --v) {
      const std::uint32_t bit = std::uint32_t{1} << (v - 1);
      if (!(remaining & bit)) continue;
      std::uint64_t degree = 0;
      for (auto m : masks_) {
        if ((m & bit) && (m & ~static_cast<std::uint64_t>(remaining)) == 0) ++degree;
      }
      char kind;
      if (degree == 0) {
        kind = '0';
      } else if (degree == full) {
        kind = '1';
      } else {
        continue;
      }
      if (peel(remaining & ~bit)) {
        order_[size - 1] = v;
        bits_[size - 1] = kind;
        return true;
      }
    }
    failed_.insert(remaining);
    return false;
  }

  unsigned n_;
  unsigned k_;
  std::vector<std::uint64_t> masks_;
  std::string bits_;
  std::vector<Vertex> order_;
  std::unordered_set<std::uint32_t> failed_;
};

}  // namespace

std::optional<Recognition> recognize_zero_one_constructable(const Hypergraph& h, Guard guard) {
  const auto k = h.uniformity();
  if (!k || *k < 2) {
    throw std::invalid_argument("recognize: hypergraph must declare a uniformity k >= 2");
  }
  if (h.vertex_count() == 0) throw std::invalid_argument("recognize: empty vertex set");
  constexpr std::size_t guard_n = 20;
  if (h.vertex_count() > guard_n && guard == Guard::enforce) {
    throw GuardExceeded("recognize: n = " + std::to_string(h.vertex_count()) +
                        " exceeds the backtracking guard n <= 20");
  }
  if (h.vertex_count() > 31) throw GuardExceeded("recognize: hard limit n <= 31");
  Peeler peeler(h, static_cast<unsigned>(*k));
  if (!peeler.run()) return std::nullopt;
  return peeler.result();
}

}  // namespace antireg
