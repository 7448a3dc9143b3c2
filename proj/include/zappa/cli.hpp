#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zappa::cli {

/// Exit codes: 0 all claims pass, 1 a claim failed, 2 usage, input or scale
/// error. Diagnostics go to `err`, results to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zappa::cli
