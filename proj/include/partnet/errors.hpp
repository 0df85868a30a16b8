#ifndef PARTNET_ERRORS_HPP
#define PARTNET_ERRORS_HPP

#include <stdexcept>

namespace partnet {

/// A jump was requested whose validity conditions do not hold.
struct InvalidJump : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An invariant-initial-term jump would collide with an existing part.
struct InvalidInvariantJump : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A materialization would exceed the configured node or entry budget.
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace partnet

#endif
