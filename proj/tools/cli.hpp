#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tkklab::cli {

// Exit status: 0 when every requested check passes, 1 on a failed check,
// 2 on a usage error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tkklab::cli
