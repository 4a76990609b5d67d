#ifndef DHSEARCH_ERRORS_HPP
#define DHSEARCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dhsearch {

// Precondition violations: bad N/t/K/delta, malformed histories, n out of range.
class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a hard memory/size bound (e.g. full Gram dump for K > 12).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed forms need tan^2(theta) < 1; the direct method has no such restriction.
class ClosedFormDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// theta == 0: the step unitary is the identity and no rotation ever happens.
class DegenerateDynamicsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// search_time could not find Pr(K) >= threshold; carries the supremum seen.
class NoCrossingError : public std::runtime_error {
 public:
  NoCrossingError(const std::string& what, double supremum)
      : std::runtime_error(what), supremum_(supremum) {}
  double supremum() const { return supremum_; }

 private:
  double supremum_;
};

}  // namespace dhsearch

#endif  // DHSEARCH_ERRORS_HPP
