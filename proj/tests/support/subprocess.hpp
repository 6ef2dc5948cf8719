// Copyright 2026 The Setfn Authors.
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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// A unique temporary directory, removed on destruction.
class Scratch {
 public:
  Scratch() {
    const auto base = std::filesystem::temp_directory_path();
    for (;;) {
      const auto candidate =
          base / ("setfn_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter()++));
      if (std::filesystem::create_directory(candidate)) {
        dir_ = candidate;
        return;
      }
    }
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  ~Scratch() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path write(const std::string& name,
                              const std::string& content) const {
    const auto path = dir_ / name;
    std::ofstream out(path);
    out << content;
    return path;
  }

 private:
  static int& counter() {
    static int value = 0;
    return value;
  }
  std::filesystem::path dir_;
};

// Runs a shell command, capturing stdout and stderr separately.
inline RunResult run(const Scratch& scratch, const std::string& command) {
  const auto out_path = scratch.dir() / "last_stdout.txt";
  const auto err_path = scratch.dir() / "last_stderr.txt";
  const std::string full = command + " > '" + out_path.string() + "' 2> '" +
                           err_path.string() + "'";
  const int status = std::system(full.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

}  // namespace testsupport
