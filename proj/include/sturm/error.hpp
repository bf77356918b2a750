#pragma once

#include <stdexcept>

namespace sturm {

// Surface-syntax problems, domain/precondition violations and exhausted
// extension budgets are distinct conditions; the CLI maps them to the
// exit codes 2, 3 and 4 respectively.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sturm
