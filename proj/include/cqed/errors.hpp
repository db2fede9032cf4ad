// Copyright 2026 The cqedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cqed {

// Numeric values are part of the C API and the CSV error_code column.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidConfig = 1,
  kDomain = 2,
  kUltrastrong = 3,        // |alpha_m| >= 1
  kUnstable = 4,           // B_1 <= 0 or unstable fluctuation drift
  kNegativeSolution = 5,   // photon-number system has a negative root
  kSolverFailure = 6,      // Newton did not converge
  kDegenerateSpectrum = 7, // omega_21 == 0
  kHarmonicDegeneracy = 8, // alpha_r == 0, tau_p infinite
  kDegenerateRegime = 9,   // zero output photons with nonzero d_mm
  kResource = 10,
  kContract = 11,
  kUnsupported = 12,
  kIo = 13,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cqed
