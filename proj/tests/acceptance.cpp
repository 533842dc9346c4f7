// Copyright 2026 The erravg Authors
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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion K   run criterion K only
//   acceptance --trials T      override statistical sample counts
//
// Exit status is 1 when any selected criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "erravg/validation.hpp"

int main(int argc, char** argv) {
  erravg::ValidationOptions options;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      ids.push_back(std::atoi(argv[++i]));
    } else if (arg == "--trials" && i + 1 < argc) {
      options.trials = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--criterion K]... [--trials T] [--seed S]\n";
      return 2;
    }
  }
  if (ids.empty())
    for (int id = 1; id <= erravg::kCriterionCount; ++id) ids.push_back(id);

  bool ok = true;
  for (int id : ids) {
    if (id < 1 || id > erravg::kCriterionCount) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
    const auto r = erravg::run_criterion(id, options);
    std::cout << erravg::format(r) << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    if (r.status == erravg::Status::fail) ok = false;
  }
  return ok ? 0 : 1;
}
