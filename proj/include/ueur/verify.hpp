// Copyright 2026 The unruh-eur Authors
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

// Desk-scale run of the cross-module invariants, used by `ueur verify`.

#include <string>
#include <vector>

namespace ueur {

struct VerifyCheck {
  std::string module;
  std::string name;
  /// Worst observed violation measure; the check passes iff it is <= tolerance.
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  /// Fault injection: every stationary state the suite builds has d -> -d.
  bool flip_d_sign = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
  std::vector<std::string> failures() const;
};

VerifyReport run_verification(const VerifyOptions& options = {});

/// Aligned text table, one check per line.
std::string format_report(const VerifyReport& report);

}  // namespace ueur
