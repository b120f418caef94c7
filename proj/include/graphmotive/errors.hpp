#ifndef GRAPHMOTIVE_ERRORS_HPP
#define GRAPHMOTIVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphmotive {

// Malformed input: unknown edge ids, bad parameters, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size guard or counting budget was exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact division left a remainder. Every identity that divides in this
// library is exact, so this always indicates a bug or an invalid request.
class ExactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace graphmotive

#endif
