#pragma once

#include <iosfwd>

namespace f2rp {

// Dispatch of the f2rp command line.  Exit codes: 0 success, 1 domain
// error, 2 usage error.  FERMAT2RP_THREADS caps the OpenMP worker count.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace f2rp
