// Copyright 2026 The wqm Authors
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

#include <iostream>
#include <string>
#include <vector>

#include "wqm/cli/args.hpp"
#include "wqm/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const wqm::cli::ParseOutcome parsed = wqm::cli::parse_args(args);
  if (!parsed.options) {
    (parsed.exit_code == wqm::cli::kExitOk ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  return wqm::cli::run(*parsed.options, std::cout, std::cerr);
}
