#ifndef NEGWIT_ERRORS_HPP
#define NEGWIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negwit {

// Numerical failure at runtime (eigensolver non-convergence, degenerate
// cancellation). Distinct from std::invalid_argument, which is reserved for
// precondition violations, so callers can map the two to different exit codes.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace negwit

#endif
