#ifndef ANTIREG_ERRORS_HPP
#define ANTIREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace antireg {

// Thrown when an input exceeds the size cap of an exponential-time routine.
// Callers may retry with Guard::bypass.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Guard { enforce, bypass };

}  // namespace antireg

#endif  // ANTIREG_ERRORS_HPP
