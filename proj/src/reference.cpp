#include "noisedim/reference.hpp"

#include <stdexcept>
#include <string>

namespace noisedim::reference {

double format_entropy(std::string_view format) {
  for (const auto& entry : kFormatEntropies)
    if (entry.format == format) return entry.bits;
  throw std::invalid_argument("no published entropy for format '" + std::string(format) + "'");
}

}  // namespace noisedim::reference
