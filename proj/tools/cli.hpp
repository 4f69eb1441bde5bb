#pragma once

#include <iosfwd>

namespace gl2gauss::cli {

/// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap exceeded.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gl2gauss::cli
