#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carc::cli {

// Exit codes: 0 positive/pass, 1 negative/fail, 2 usage or format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace carc::cli
