#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace softtop::test {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with `args` appended, capturing stdout (stderr merged).
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SOFTTOP_CLI_PATH) + " " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string fixture_arg(const std::string& name) {
  return std::string(SOFTTOP_FIXTURE_DIR) + "/" + name;
}

}  // namespace softtop::test
