#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsgate {

// Base for all domain errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A detection outcome removed more photons than the running offset holds.
// The truncated coefficient is gone; no downstream element can restore it.
struct LossyBranchError : Error {
  using Error::Error;
};

// Detected photon count exceeds the photons available at the auxiliary output.
struct InvalidDetectionError : Error {
  using Error::Error;
};

// Two-mode photon total above the hard construction cap.
struct CapacityError : Error {
  using Error::Error;
};

// The composed map does not return to offset 0, or its residuals are out of
// tolerance, so no input-independent success probability exists.
struct NotAGateError : Error {
  using Error::Error;
};

// Composed vacuum factor F0 vanished; NS residuals are undefined.
struct DegenerateMapError : Error {
  using Error::Error;
};

// Correction pair does not subtract exactly one photon, or the full
// error-then-correct chain has an invalid intermediate offset.
struct NotACorrectionError : Error {
  using Error::Error;
};

// Main gate and correction chain disagree on the shared first splitter.
struct IncompatibleBranchesError : Error {
  using Error::Error;
};

// Sequence grammar violation; carries the offending character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace nsgate
