// Command-line front end. dispatch() does all the work so that the tool's
// behaviour can be exercised in-process.
//
// Exit codes: 0 success, 1 the computation succeeded with a negative answer
// (NOT_DETECTED, invalid complex, excluded contraction, contradiction),
// 2 usage or input error, 3 internal error.

#ifndef K3CONE_CLI_HPP_
#define K3CONE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace k3cone {

struct CommandResult {
  int exit_code = 0;
  std::string out;  // stdout payload
  std::string err;  // diagnostics
};

// args excludes the program name. Progress lines of long runs go to
// `progress` when it is non-null.
CommandResult dispatch(const std::vector<std::string>& args, std::ostream* progress = nullptr);

}  // namespace k3cone

#endif
