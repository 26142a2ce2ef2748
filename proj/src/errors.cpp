#include "xorcert/errors.hpp"

namespace xorcert {

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::invalid_argument([&] {
        std::string joined;
        for (const auto& s : issues) joined += (joined.empty() ? "" : "; ") + s;
        return joined.empty() ? std::string("validation failed") : joined;
      }()),
      issues_(std::move(issues)) {}

}  // namespace xorcert
