#ifndef NOISEDIM_CLI_HPP
#define NOISEDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace noisedim {

inline constexpr const char* kToolVersion = "0.1.0";

/// Entry point of the `noisedim` command. `args` includes the program name.
/// Machine-readable payloads go to `out`, human summaries to `err`.
/// Returns the process exit code: 0 on success, 1 on a failed computation
/// or reproduction check, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noisedim

#endif  // NOISEDIM_CLI_HPP
