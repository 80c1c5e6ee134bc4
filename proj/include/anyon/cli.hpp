#pragma once

#include <ostream>

namespace anyon {

// Exit codes: 0 success, 1 infeasible input or failed check, 2 usage or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anyon
