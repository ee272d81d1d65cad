#ifndef POSETOP_TESTS_FIXTURES_HPP_
#define POSETOP_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef POSETOP_FIXTURE_DIR
#define POSETOP_FIXTURE_DIR "tests/fixtures"
#endif

// One integer per line; '#' starts a comment line.
inline std::vector<std::uint64_t> read_fixture(const std::string& name) {
  std::ifstream in(std::string(POSETOP_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::uint64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(std::stoull(line));
  }
  return out;
}

#endif  // POSETOP_TESTS_FIXTURES_HPP_
