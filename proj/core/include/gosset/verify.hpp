#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gosset/lie_type.hpp"

namespace gosset::verify {

struct VerifyOptions {
  double tolerance = 1e-8;          // dual-route agreement and eigencheck bound
  std::uint64_t seed = 0x67055e7u;  // Jacobi-identity sampling
  int jacobi_samples = 600;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0;    // the measured quantity (residual, count, minimum, ...)
  std::string detail;  // one line of context
};

// Runs every structural, exact, and spectral check for one type.  Checks that
// fail with an exception are recorded as failed with the message as detail;
// checks whose prerequisites never got built are omitted (the prerequisite
// failure is itself a recorded check, so passed() still turns false).
struct VerifyReport {
  roots::LieType type;
  int h = 0;
  std::vector<CheckResult> checks;
  double max_relative_discrepancy = 0;  // operator spectrum vs adjoint oracle
  double wall_ms = 0;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

VerifyReport run_verify(const roots::LieType& type, const VerifyOptions& opts = {});

}  // namespace gosset::verify
