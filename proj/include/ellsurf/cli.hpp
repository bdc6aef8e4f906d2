#pragma once

#include <string>
#include <vector>

namespace ellsurf {

struct RunResult {
  int code = 0;  // 0 success, 2 input error, 3 math-domain error
  std::string out;
  std::string err;
};

// One CLI invocation (arguments without the program name).  Never throws;
// output is deterministic for identical invocations.
RunResult run(const std::vector<std::string>& args);

}  // namespace ellsurf
