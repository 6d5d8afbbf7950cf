#ifndef CTLAB_TESTS_CLI_UTIL_HPP
#define CTLAB_TESTS_CLI_UTIL_HPP

// Small subprocess harness for exercising the installed CLI binary. The
// binary path and the repository data directory come in as compile
// definitions from the build.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace cliutil {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string temp_path(const std::string &tag) {
  static int counter = 0;
  std::ostringstream path;
  path << "/tmp/ctlab_test_" << ::getpid() << "_" << counter++ << "_" << tag;
  return path.str();
}

inline std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spit(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  out << text;
  if (!out)
    throw std::runtime_error("cannot write " + path);
}

// Runs `ctlab <args>` through the shell. Arguments needing quoting must be
// quoted by the caller.
inline RunResult run_cli(const std::string &args, const std::string &env_prefix = "") {
  RunResult result;
  std::string err_path = temp_path("stderr");
  std::string cmd = env_prefix + CTLAB_CLI_PATH " " + args + " 2>" + err_path;
  FILE *pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr)
    throw std::runtime_error("popen failed for: " + cmd);
  std::array<char, 4096> chunk{};
  std::size_t got = 0;
  while ((got = ::fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    result.out.append(chunk.data(), got);
  int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = slurp(err_path);
  ::remove(err_path.c_str());
  return result;
}

} // namespace cliutil

#endif
