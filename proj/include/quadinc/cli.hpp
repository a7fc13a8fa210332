#pragma once

#include <iosfwd>

namespace quadinc {

/// Entry point of the `quadinc` tool. Returns 0 on success, 1 when an audit
/// fails, 2 on bad input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadinc
