#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "mono/search.hpp"

namespace mono {

// Exit codes: 0 success/pass, 1 input error, 2 check failure,
// 3 unknown / structural-only pass.
enum ExitCode { kOk = 0, kInputError = 1, kCheckFailed = 2, kUnknown = 3 };

struct CommandRequest {
  std::string command;
  std::string fact_path;       // --fact or positional
  std::string fact2_path;      // second positional (equiv)
  std::string theta_path;      // --theta
  std::string system_path;     // induct-validate positional
  std::string braid_text;      // --braid
  std::string mode = "projective";  // --mode affine|projective
  int at = 0;                  // --at
  std::string direction = "forward";  // --dir
  std::optional<long long> max_nodes;  // --max-nodes (else MONODROMY_BUDGET, else default)
  int max_depth = 64;          // --max-depth
  bool no_chain_check = false;
  bool simplify = false;       // pi1 --simplify
  std::string format = "text";  // --format json|text
};

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err);

// argv-level entry used by the binary; parses flags with CLI11.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mono
