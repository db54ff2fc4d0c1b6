#pragma once

#include <stdexcept>
#include <string>

namespace ggt {

// Invalid input or a violated precondition.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration bound (closure size, ball size, search space) was hit.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

}  // namespace ggt
