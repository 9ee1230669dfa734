#pragma once

#include "cbethe/rational.hpp"

#include <stdexcept>
#include <string>

namespace cbethe {

// A denominator factor vanished during evaluation. color 0 means phi.
struct PoleHit : std::runtime_error {
    int color;
    int root_index;
    Rational shift;
    PoleHit(int c, int k, Rational sh)
        : std::runtime_error("pole hit: color " + std::to_string(c) + ", root " + std::to_string(k) +
                             ", shift " + sh.str()),
          color(c), root_index(k), shift(std::move(sh)) {}
};

struct NonSimplePole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameters from a caller (maps to CLI exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cbethe
