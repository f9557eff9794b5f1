// Copyright 2026 The sdmw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <vector>

namespace sdm {

enum class Profile : unsigned char { Quick, Full };
Profile parse_profile(const std::string& name);  // throws invalid_argument

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;       // property held and the time limit was met
  std::string detail;    // counts, or the first failure
  double seconds = 0;
  double limit = 0;      // seconds
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, Profile p);
std::vector<CriterionResult> run_suite(Profile p);

}  // namespace sdm
