#ifndef WICKRING_CLI_HPP
#define WICKRING_CLI_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace wickring::cli {

/// Parses "a+bi" style complex literals ("0.5", "-1+2i", "i", "3-0.25i").
std::complex<double> parse_complex(const std::string& text);

/// Comma-separated list of complex literals.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

/// Dispatches one command.  Returns the process exit code: 0 on success,
/// 2 on validation errors, 3 on mathematical errors; errors are emitted as
/// {"error":{"kind":...,"detail":...}} on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wickring::cli

#endif
