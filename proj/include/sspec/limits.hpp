#pragma once

#include <cstdint>

namespace sspec {

struct Limits {
  int dimension_cap = 10;
  int level_cap = 8;
  std::uint64_t enumeration_budget = 2'000'000;
};

// Process-wide caps. Reads SSPEC_DIM_CAP, SSPEC_LEVEL_CAP and SSPEC_BUDGET
// from the environment on first use.
Limits limits();
void set_limits(const Limits& l);

void require_dimension(int dim, const char* what);
void require_level(int level, const char* what);

// RAII override used by tests and the acceptance suite.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l) : saved_(limits()) { set_limits(l); }
  ~ScopedLimits() { set_limits(saved_); }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace sspec
