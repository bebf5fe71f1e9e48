// Copyright 2026 The agcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite shared by the test binary and `agcodes selftest`.

#ifndef AGC_SELFTEST_HPP
#define AGC_SELFTEST_HPP

#include <functional>
#include <string>
#include <vector>

namespace agc::selftest {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::string detail;  // counts of checked instances, or the first failure
  double seconds;
};

/// Number of acceptance criteria.
int criterion_count();
CriterionResult run_criterion(int id);
/// Runs every criterion, calling `progress` after each.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& progress = {});
std::string format_line(const CriterionResult& r);

}  // namespace agc::selftest

#endif  // AGC_SELFTEST_HPP
