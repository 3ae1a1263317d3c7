#include "noisedim/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace noisedim {

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    unsigned value = 0;
    const char* last = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, last, value);
    if (ec == std::errc{} && ptr == last && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace noisedim
