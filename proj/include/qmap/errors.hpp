#pragma once

#include <stdexcept>
#include <string>

namespace qmap {

/// Base class for every error raised by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A q-Pochhammer denominator vanished with no vanishing numerator to absorb it.
struct PoleError : Error {
  using Error::Error;
};

/// A q-binomial series was requested for a monomial of z-degree 0.
struct NonTruncatingError : Error {
  using Error::Error;
};

struct CapMismatch : Error {
  using Error::Error;
};

struct OutOfDiagram : Error {
  using Error::Error;
};

struct NotInterlacing : Error {
  using Error::Error;
};

/// A Gram matrix became singular at the chosen (hbar, q) point.
struct DegenerateSpecialization : Error {
  using Error::Error;
};

/// A chamber limit left a coefficient depending on the framing parameters.
struct UnresolvedLimit : Error {
  using Error::Error;
};

struct InvalidFixedPoint : Error {
  using Error::Error;
};

/// Bad user input: unparsable partition, rational, or configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qmap
