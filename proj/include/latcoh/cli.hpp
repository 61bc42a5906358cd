#pragma once

#include <string>
#include <vector>

namespace latcoh {

// Full command-line front end; args exclude the program name. Exit codes:
// 0 success / all-pass / "yes", 1 verification failure or "no", 2 usage or
// parse error, 3 resource limit (including inconclusive isomorphism search).
int cli_main(std::vector<std::string> args);

} // namespace latcoh
