#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "flatrank/diagram.hpp"
#include "oracles/corpus.hpp"

namespace testing_support {

inline std::filesystem::path data_dir() { return FLATRANK_DATA_DIR; }

inline flatrank::CoxeterDiagram sample(const std::string& file) {
  return oracle::read_diagram_file(data_dir() / file);
}

struct RunResult {
  int code;
  std::string out;
};

/// Runs the CLI with `args` (already shell-quoted), capturing stdout.
inline RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FLATRANK_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace testing_support
