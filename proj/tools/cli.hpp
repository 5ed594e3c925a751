#pragma once

#include <iosfwd>

namespace discourse::cli {

/// Runs the `discourse` command line. Returns the process exit status:
/// 0 on success, 1 on data or I/O errors, 2 on usage errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace discourse::cli
