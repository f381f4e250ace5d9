#pragma once

#include <stdexcept>
#include <string>

namespace effort {

enum class Errc {
  validation,        // malformed distribution / instance data
  conditioning,      // conditioning on an impossible event
  estimation,        // no samples and no smoothing
  capacity,          // exact solver state cap exceeded
  unavailable,       // MDP action not available in this state
  unsupported,       // structure outside what the operation supports
  infeasible,        // overweight subset, impossible schedule
  protocol,          // policy/driver contract breach
  usage              // bad argument from the caller
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace effort
