// Copyright 2026 The impactscreen Authors
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


#ifndef IMPACTSCREEN_TESTS_CLI_RUNNER_HPP_
#define IMPACTSCREEN_TESTS_CLI_RUNNER_HPP_

#include <sys/wait.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace impactscreen::test {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char c : arg) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

inline RunResult run(const std::vector<std::string>& args, const std::string& env = "") {
  TempDir dir("cli");
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += quote(IMPACTSCREEN_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote((dir.path() / "out").string()) + " 2>" + quote((dir.path() / "err").string());
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(dir.path() / "out");
  r.err = read_file(dir.path() / "err");
  return r;
}

}  // namespace impactscreen::test

#endif  // IMPACTSCREEN_TESTS_CLI_RUNNER_HPP_
