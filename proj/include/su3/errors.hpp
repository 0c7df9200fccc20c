#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace su3 {

/// Raised when a constructor or operation receives parameters outside its
/// documented range.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a closure would grow past the configured element cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::size_t cap)
    : std::runtime_error("group closure exceeded order cap of " + std::to_string(cap)),
      cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

class NotDiagonal : public std::invalid_argument {
public:
  NotDiagonal() : std::invalid_argument("element set contains a non-diagonal element") {}
};

class NotClosed : public std::invalid_argument {
public:
  NotClosed() : std::invalid_argument("element set is not closed under multiplication") {}
};

class SubNotContained : public std::invalid_argument {
public:
  SubNotContained() : std::invalid_argument("subgroup is not contained in the parent group") {}
};

} // namespace su3
