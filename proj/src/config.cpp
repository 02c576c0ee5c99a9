#include "f1cones/config.hpp"

#include <cstdlib>
#include <string>

namespace f1cones {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    long long v = std::stoll(raw);
    return v > 0 ? static_cast<std::size_t>(v) : fallback;
  } catch (...) {
    return fallback;
  }
}

}  // namespace

std::size_t hilbert_dimension_bound() { return env_or("F1CONES_HILBERT_DIM_BOUND", 4); }
std::size_t normal_form_degree_bound() { return env_or("F1CONES_DEGREE_BOUND", 12); }
std::size_t membership_budget() { return env_or("F1CONES_MEMBERSHIP_BUDGET", 200000); }

}  // namespace f1cones
