#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tb::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one `tb` command.  `args` excludes the program name; `input` stands in
// for standard input when a verb's main argument is not given as a flag.
// Exit codes: 0 success, 1 parse or validation error, 2 "REJECT <code> <witness>".
Result run(const std::vector<std::string>& args, const std::string& input = {});

// Standard input is read only if a verb needs it.
using InputSource = std::function<std::string()>;
Result run(const std::vector<std::string>& args, const InputSource& input);

}  // namespace tb::cli
