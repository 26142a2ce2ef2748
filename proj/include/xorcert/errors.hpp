#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xorcert {

/// Input violates a documented invariant. Carries every issue found, not just
/// the first.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(std::vector<std::string> issues);
  explicit ValidationError(std::string issue) : ValidationError(std::vector<std::string>{std::move(issue)}) {}

  const std::vector<std::string>& issues() const { return issues_; }

private:
  std::vector<std::string> issues_;
};

/// A configured size cap (enumeration, matrix dimension, seed space) would be
/// exceeded.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace xorcert
