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
// One line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [quick|full] [criterion...]

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "sdm/suite.hpp"

int main(int argc, char** argv) {
  sdm::Profile profile = sdm::Profile::Full;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "quick" || a == "full")
      profile = sdm::parse_profile(a);
    else
      ids.push_back(std::atoi(a.c_str()));
  }
  if (ids.empty())
    for (int i = 1; i <= sdm::kCriterionCount; ++i) ids.push_back(i);
  bool all = true;
  for (int id : ids) {
    sdm::CriterionResult r = sdm::run_criterion(id, profile);
    std::printf("criterion %d %-24s %s  %.2fs/%.0fs  %s\n", r.id,
                r.name.c_str(), r.ok ? "PASS" : "FAIL", r.seconds, r.limit,
                r.detail.c_str());
    std::fflush(stdout);
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
