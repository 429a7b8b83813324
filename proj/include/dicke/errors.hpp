#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Probe atom outside the dispersive regime |delta_s| >= 10 g_s.
struct RegimeViolation : Error {
    using Error::Error;
};

// Frequency shift would make the cavity frequency non-positive.
struct InvalidShift : Error {
    using Error::Error;
};

// An operation was asked for a frame in the wrong phase.
struct WrongPhase : Error {
    using Error::Error;
};

// Closed-form spectra are undefined exactly at g = g_c.
struct CriticalPoint : Error {
    using Error::Error;
};

// Eigensolver or cutoff escalation exhausted its budget.
struct NoConvergence : Error {
    using Error::Error;
};

// Krylov propagation could not meet the per-step error bound.
struct StepTooLarge : Error {
    using Error::Error;
};

}  // namespace dicke
