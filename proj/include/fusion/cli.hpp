#pragma once

#include <iosfwd>

namespace fusion {

// Exit codes: 0 ok, 1 unresolved classes without --allow-unresolved,
// 2 usage error, 3 size bound exceeded, 4 any other failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fusion
