#ifndef FRAMECOMP_CLI_HPP
#define FRAMECOMP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace framecomp {

/// Full command-line entry point.  Exit codes: 0 success, 1 validation
/// failure, 2 verification failure, 3 internal inconsistency.
int run_cli(int argc, const char* const* argv);

namespace cli {

struct Options {
    std::string input_path;
    std::string output_path;
    std::string format = "text";  // json | text | csv
    std::vector<std::string> potentials;
    std::vector<double> lambda;
    std::vector<double> norms;
    std::uint64_t seed = 42;
    std::size_t budget = 2000;
    double tol = 1e-9;
    bool allow_large = false;
};

int cmd_solve(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_complete(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_potential(const Options& opts, std::ostream& out, std::ostream& err);

/// "0,0,10" -> {0, 0, 10}.  Throws validation_error on malformed input.
std::vector<double> parse_number_list(const std::string& text);

/// Round to `digits` significant decimal digits (used for 12-digit JSON and
/// 6-digit text output).
double round_sig(double x, int digits);

} // namespace cli
} // namespace framecomp

#endif
