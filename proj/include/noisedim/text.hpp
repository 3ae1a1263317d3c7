#ifndef NOISEDIM_TEXT_HPP
#define NOISEDIM_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace noisedim {

/// Shortest decimal that round-trips to `value`; "inf", "-inf" or "nan" for
/// non-finite input.
std::string format_real(double value);

/// Splits on any run of the given delimiter characters, dropping empties.
std::vector<std::string_view> split_tokens(std::string_view text, std::string_view delimiters);

std::string to_lower(std::string_view text);

}  // namespace noisedim

#endif  // NOISEDIM_TEXT_HPP
