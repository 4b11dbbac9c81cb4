#pragma once

#include <stdexcept>

namespace kconn {

// Base class for domain-level failures (infeasible inputs, procedures that
// cannot complete). Plain precondition violations use std::invalid_argument
// or std::out_of_range instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Target connectivity cannot be reached for this input (e.g. fewer than
// k+1 robots).
struct Infeasible : Error {
    using Error::Error;
};

// A relocation direction is undefined because the two robots coincide.
struct DegenerateDirection : Error {
    using Error::Error;
};

// Instance generation exhausted its rejection budget.
struct GenerationFailed : Error {
    using Error::Error;
};

// Scene rendering requested for an unsupported instance (3D).
struct RenderUnsupported : Error {
    using Error::Error;
};

}  // namespace kconn
