#pragma once

#include <stdexcept>

namespace qtype {

/// Requested problem size exceeds a configured safety cap (ambient
/// dimension d^n for the spectral oracle, group order during closure).
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The spectral oracle could not separate the blocks even after reseeding.
struct DegenerateSpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A floating-point oracle value did not round to an integer within its
/// stated tolerance.
struct RoundingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exactness guarantee of a closed formula failed. Signals a bug in
/// this library, never bad user input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qtype
