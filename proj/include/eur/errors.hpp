#ifndef EUR_ERRORS_HPP
#define EUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eur {

// Rejected input: the message names the violated precondition or invariant.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eur

#endif  // EUR_ERRORS_HPP
