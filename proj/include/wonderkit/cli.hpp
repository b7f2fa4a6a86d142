// cli.hpp -- command-line entry point. Exit codes: 0 success, 1 domain
// error, 2 usage error.

#pragma once

namespace wonderkit {

int run_cli(int argc, const char* const* argv);

}  // namespace wonderkit
