#include "antireg/building_string.hpp"

#include <stdexcept>

namespace antireg {

BuildingString::BuildingString(int k, std::string_view bits) : k_(k), bits_(bits) {
  if (k < 2) throw std::invalid_argument("building string: k must be at least 2");
  if (bits_.empty()) throw std::invalid_argument("building string: empty word");
  for (char ch : bits_) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("building string: only '0' and '1' are allowed");
    }
  }
  const auto first_one = bits_.find('1');
  if (first_one != std::string::npos && first_one + 1 < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("building string: a dominating vertex needs k-1 predecessors");
  }
}

std::size_t BuildingString::leading_zeros() const {
  const auto first_one = bits_.find('1');
  return first_one == std::string::npos ? bits_.size() : first_one;
}

bool BuildingString::antiregular() const {
  const std::size_t n = size();
  if (n < static_cast<std::size_t>(k_)) return bits_.find('1') == std::string::npos;
  return *this == antiregular_string(n, k_, connected());
}

BuildingString antiregular_string(std::size_t n, int k, bool connected) {
  if (n < 1) throw std::invalid_argument("antiregular_string: n must be at least 1");
  if (k < 2) throw std::invalid_argument("antiregular_string: k must be at least 2");
  const auto uk = static_cast<std::size_t>(k);
  if (connected && n < uk) {
    throw std::invalid_argument("antiregular_string: a connected word needs n >= k");
  }
  if (n <= uk - 1) return BuildingString(k, std::string(n, '0'));
  if (connected) {
    // Last bit 1, alternating backwards down to position k.
    std::string bits(n, '0');
    for (std::size_t p = uk; p <= n; ++p) {
      if ((n - p) % 2 == 0) bits[p - 1] = '1';
    }
    return BuildingString(k, bits);
  }
  if (n == uk) return BuildingString(k, std::string(n, '0'));
  return BuildingString(k, antiregular_string(n - 1, k, true).str() + '0');
}

}  // namespace antireg
