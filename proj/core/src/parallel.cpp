#include "efalg/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace efalg {

std::size_t default_jobs() {
  if (const char* env = std::getenv("EFALG_JOBS")) {
    const std::string_view s(env);
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && end == s.data() + s.size() && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace efalg
