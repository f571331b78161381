#pragma once

#include <iosfwd>
#include <string>

namespace qjl::cli {

enum class Output { Text, Json, Csv };

struct RunConfig {
    long trunc_N = 12;
    long identity_N = 20;
    double float_tol = 1e-6;
    Output output = Output::Text;

    // Defaults with QJL_TRUNC_N applied; throws ParseError for a bad value.
    static RunConfig from_environment();
};

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kPrecision = 3 };

// Parses argv (argv[0] is the program name), runs one subcommand and returns
// its exit code. Results go to out, diagnostics to err.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qjl::cli
