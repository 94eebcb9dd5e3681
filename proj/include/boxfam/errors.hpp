#pragma once

#include <stdexcept>
#include <string>

namespace boxfam {

/// Precondition or input violation (bad block position, dimension mismatch, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured budget (family size, solver vertex count, ...) was exceeded.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace boxfam
