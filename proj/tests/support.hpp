#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "skc/elections.hpp"
#include "skc/rng.hpp"

namespace testsupport {

// The six rankings of three candidates, lexicographic order.
inline const std::vector<skc::Vote>& perms3() {
  static const std::vector<skc::Vote> perms = [] {
    std::vector<skc::Vote> out;
    skc::Vote p{0, 1, 2};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

inline skc::Election profile3(std::initializer_list<int> perm_indices) {
  skc::Election e;
  e.m = 3;
  for (int idx : perm_indices) e.votes.push_back(perms3()[static_cast<std::size_t>(idx)]);
  return e;
}

inline skc::Election random_election(int m, int n, skc::RandomStream& rng) {
  skc::Election e;
  e.m = m;
  for (int i = 0; i < n; ++i) {
    skc::Vote v(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) v[static_cast<std::size_t>(c)] = c;
    skc::shuffle(v, rng);
    e.votes.push_back(std::move(v));
  }
  return e;
}

inline std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("skc_test_" + name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

#ifdef SKC_CLI_PATH
inline CliResult run_cli(const std::string& args, bool combine_stderr = false) {
  const std::string cmd = std::string(SKC_CLI_PATH) + " " + args +
                          (combine_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
    result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}
#endif

}  // namespace testsupport
