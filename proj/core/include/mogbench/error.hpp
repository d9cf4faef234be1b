#pragma once

#include <stdexcept>
#include <string>

namespace mogbench {

/// Machine-readable failure categories. The CLI prints these verbatim as
/// "error: <code>: <message>" and exits nonzero.
enum class ErrorCode {
  catalog_error,
  density_error,
  id_error,
  insufficient_objects,
  planning_error,
  empty_scene,
  incapable_hand,
  calibration_error,
  empty_input,
  ingest_error,
  validation_error,
  io_error,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Placement gave up before reaching the requested object count.
class DensityError : public Error {
 public:
  DensityError(int achieved, int requested);

  int achieved() const { return achieved_; }
  int requested() const { return requested_; }

 private:
  int achieved_;
  int requested_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mogbench
