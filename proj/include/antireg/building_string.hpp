#ifndef ANTIREG_BUILDING_STRING_HPP
#define ANTIREG_BUILDING_STRING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace antireg {

/// A {0,1} word recording the order in which vertices were added to a
/// k-uniform hypergraph: '0' adds an isolated vertex, '1' adds a dominating
/// vertex (joined to every (k-1)-subset of the vertices already present).
///
/// Positions are 1-based to match vertex labels. A dominating vertex needs at
/// least k-1 predecessors, so the first '1' (if any) sits at position >= k.
class BuildingString {
 public:
  /// Throws std::invalid_argument if k < 2, bits is empty, contains a
  /// character other than '0'/'1', or places a '1' before position k.
  BuildingString(int k, std::string_view bits);

  int k() const { return k_; }
  std::size_t size() const { return bits_.size(); }
  const std::string& str() const { return bits_; }

  /// Bit at 1-based position.
  bool dominating(std::size_t position) const { return bits_[position - 1] == '1'; }

  /// Number of leading zeros before the first '1'; size() when there is none.
  std::size_t leading_zeros() const;
  bool has_dominating() const { return leading_zeros() < size(); }

  /// Connected iff the last vertex added is dominating.
  bool connected() const { return bits_.back() == '1'; }

  /// True iff this is the antiregular word of its length and connectivity.
  bool antiregular() const;

  friend bool operator==(const BuildingString&, const BuildingString&) = default;

 private:
  int k_;
  std::string bits_;
};

/// The antiregular word of length n. For n <= k-1 this is all zeros
/// (disconnected only); a disconnected word with n >= k is the connected
/// word of length n-1 followed by '0'.
/// Throws std::invalid_argument if n < 1, k < 2, or connected with n < k.
BuildingString antiregular_string(std::size_t n, int k, bool connected);

}  // namespace antireg

#endif  // ANTIREG_BUILDING_STRING_HPP
