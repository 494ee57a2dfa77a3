#pragma once

#include <stdexcept>
#include <string>

namespace frob {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a library call (bad tuple, non-coprime pair, ...).
struct precondition_error : error {
  using error::error;
};

/// A counting argument exceeds the oracle cap; use a closed form instead.
struct cap_exceeded : error {
  using error::error;
};

/// g_search found no terminating window below its cap.
struct cap_exhausted : error {
  using error::error;
};

/// A closed form was evaluated outside the range where it is proven.
struct bound_error : error {
  using error::error;
};

/// Inputs to the three-integer generalization satisfy neither ratio branch.
struct condition_not_met : error {
  using error::error;
};

/// The requested branch needs 1/K with K = 0.
struct undefined_bound : error {
  using error::error;
};

}  // namespace frob
