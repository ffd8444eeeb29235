#include "sspec/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "sspec/errors.hpp"

namespace sspec {

namespace {

long env_or(const char* name, long fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || v <= 0) return fallback;
  return v;
}

struct State {
  std::atomic<int> dimension_cap;
  std::atomic<int> level_cap;
  std::atomic<std::uint64_t> budget;

  State() {
    Limits d;
    dimension_cap = static_cast<int>(env_or("SSPEC_DIM_CAP", d.dimension_cap));
    level_cap = static_cast<int>(env_or("SSPEC_LEVEL_CAP", d.level_cap));
    budget = static_cast<std::uint64_t>(
        env_or("SSPEC_BUDGET", static_cast<long>(d.enumeration_budget)));
  }
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Limits limits() {
  auto& s = state();
  return Limits{s.dimension_cap.load(), s.level_cap.load(), s.budget.load()};
}

void set_limits(const Limits& l) {
  auto& s = state();
  s.dimension_cap = l.dimension_cap;
  s.level_cap = l.level_cap;
  s.budget = l.enumeration_budget;
}

void require_dimension(int dim, const char* what) {
  int cap = limits().dimension_cap;
  if (dim > cap)
    throw CapExceeded(std::string(what) + ": dimension " + std::to_string(dim) +
                      " exceeds cap " + std::to_string(cap));
}

void require_level(int level, const char* what) {
  int cap = limits().level_cap;
  if (level > cap)
    throw CapExceeded(std::string(what) + ": level " + std::to_string(level) +
                      " exceeds cap " + std::to_string(cap));
}

}  // namespace sspec
