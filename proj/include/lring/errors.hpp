#pragma once

#include <stdexcept>
#include <string>

namespace lring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input to an elementary-basis rewrite was not symmetric under the
// required permutation group. Deliberately a hard error: silent
// symmetrization would mask bugs in the polynomial generators.
struct NonSymmetricInput : Error {
    using Error::Error;
};

// A generation request exceeded its feasibility cap and --force was not set.
struct CapExceeded : Error {
    using Error::Error;
};

// A cached universal polynomial failed to deserialize or violated its
// weight invariant on load.
struct CorruptCache : Error {
    using Error::Error;
};

// The two independent generation routes for a universal polynomial
// disagreed. Should be impossible; signals a bug.
struct RouteMismatch : Error {
    using Error::Error;
};

}  // namespace lring
