#pragma once

#include <stdexcept>
#include <string>

namespace pocketdit {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// bad config / precondition -> std::invalid_argument or SchemaError (exit 2),
// missing upstream artifact -> DependencyError (exit 3),
// NaN/Inf during computation -> NumericFailure (exit 4).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DependencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace pocketdit
