#pragma once

#include <string>
#include <vector>

namespace qramsey {

// Full command-line front end. `args` excludes the program name.
// Exit codes: 0 success, 1 usage or input error, 2 unclassifiable pair,
// 3 refuted claims under --strict-claims.
int run(const std::vector<std::string>& args);

}  // namespace qramsey
