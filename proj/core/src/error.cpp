#include "mogbench/error.hpp"

namespace mogbench {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::catalog_error: return "catalog_error";
    case ErrorCode::density_error: return "density_error";
    case ErrorCode::id_error: return "id_error";
    case ErrorCode::insufficient_objects: return "insufficient_objects";
    case ErrorCode::planning_error: return "planning_error";
    case ErrorCode::empty_scene: return "empty_scene";
    case ErrorCode::incapable_hand: return "incapable_hand";
    case ErrorCode::calibration_error: return "calibration_error";
    case ErrorCode::empty_input: return "empty_input";
    case ErrorCode::ingest_error: return "ingest_error";
    case ErrorCode::validation_error: return "validation_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "error";
}

DensityError::DensityError(int achieved, int requested)
    : Error(ErrorCode::density_error,
            "placed " + std::to_string(achieved) + " of " + std::to_string(requested) +
                " objects before the attempt cap"),
      achieved_(achieved),
      requested_(requested) {}

}  // namespace mogbench
