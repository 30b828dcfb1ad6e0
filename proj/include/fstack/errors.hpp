#pragma once

#include <stdexcept>
#include <string>

namespace fstack {

/// Thrown when an operation's documented precondition is violated by the
/// caller (e.g. asking for the size sequence of a tree edge).
class precondition_error : public std::logic_error {
 public:
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a configured resource budget (intermediate word length,
/// rewrite step count, flow iteration count) is exceeded.  This signals that
/// the computation outgrew its desk-scale budget, not that it is wrong.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fstack
