#pragma once

#include <stdexcept>
#include <string>

namespace mapforge {

// Domain-level failure: bad input data, violated precondition, cap exceeded.
// The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured work budget.  Callers see the
// required and allowed amounts so they can raise the budget deliberately
// instead of silently truncating.
struct budget_error : std::runtime_error {
    long long needed;
    long long limit;
    budget_error(long long needed_, long long limit_)
        : std::runtime_error("work budget exceeded: needs " + std::to_string(needed_) +
                             " units, limit " + std::to_string(limit_)),
          needed(needed_), limit(limit_) {}
};

} // namespace mapforge
