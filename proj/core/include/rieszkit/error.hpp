#pragma once

#include <stdexcept>
#include <string>

namespace rieszkit {

// Bad input: out-of-domain argument, unsupported order, malformed request.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// The arithmetic itself went wrong: singular system, non-finite values.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rieszkit
