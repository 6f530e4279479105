#pragma once

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace sphdim {

struct CliConfig {
  std::string command;  // list | describe | dim | verify | table
  std::string pair_id;
  std::map<std::string, long> parameters;
  std::vector<long> lambda_coeffs;
  long max_total = 2;
  std::string format = "text";  // text | json | csv
  bool parallel = false;
  bool all = false;  // verify the whole catalog
};

// Exit codes: 0 success / all match, 1 verification mismatch, 2 bad input.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// argv-level entry point (parses flags, then calls run).
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace sphdim
