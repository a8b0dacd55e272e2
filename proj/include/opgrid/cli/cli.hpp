// Copyright 2026 The opgrid Authors
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

#include <ostream>
#include <string>
#include <vector>

#include "opgrid/io/serialize.hpp"

namespace opgrid::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kCapacity = 3 };

/// Parameters shared by every subcommand; zero means unset.
struct Params {
  int n = 0;
  int k = 0;
  int p = 0;
  int q = 0;
  int m = 0;
  int r = 0;
  bool odd = false;
  std::vector<int> ks;
};

/// Builds a named construction. Throws ArgumentError for an unknown kind or
/// missing parameters.
io::Construction construct(const std::string& kind, const Params& params);

/// Runs the command line (program name excluded) and returns the exit code.
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opgrid::cli
