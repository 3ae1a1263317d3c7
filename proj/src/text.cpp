#include "noisedim/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace noisedim {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return {buffer.data(), result.ptr};
}

std::vector<std::string_view> split_tokens(std::string_view text, std::string_view delimiters) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = text.find_first_not_of(delimiters, pos);
    if (start == std::string_view::npos) break;
    const std::size_t stop = text.find_first_of(delimiters, start);
    tokens.push_back(text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
    pos = stop;
  }
  return tokens;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace noisedim
