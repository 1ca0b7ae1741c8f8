#pragma once

#include <iosfwd>

namespace dpd {

// Command-line driver for the dpd tool.  Returns the process exit code:
// 0 for affirmative verdicts, 1 for negative verdicts, 2 for errors (bad
// syntax, unreadable files, invalid certificates, unknown commands).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dpd
