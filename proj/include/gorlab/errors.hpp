#ifndef GORLAB_ERRORS_HPP
#define GORLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gorlab {

// Exit-code contract: 0 success, 2 input error, 3 stabilization failure,
// 4 internal-consistency failure.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg, int code) : std::runtime_error(std::move(msg)), code_(code) {}
  int exit_code() const { return code_; }

 private:
  int code_;
};

class InputError : public Error {
 public:
  explicit InputError(std::string msg) : Error(std::move(msg), 2) {}
};

// Raised when an iterative limit (direct system, saturation chain, sampler
// retry budget) fails to settle within its configured horizon.
class StabilizationError : public Error {
 public:
  explicit StabilizationError(std::string msg) : Error(std::move(msg), 3) {}
};

// Raised when two independent computation routes disagree. Never caught
// internally: a consistency failure is a bug, not a condition.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(std::string msg) : Error(std::move(msg), 4) {}
};

}  // namespace gorlab

#endif
