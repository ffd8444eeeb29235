#pragma once

#include "sspec/homology.hpp"

namespace sspec::detail {

// Smith normal form with optional transforms: u * m * v == d, and uinv, vinv
// are the inverses of u and v.
struct FullSNF {
  IntMatrix d;
  IntMatrix u, uinv, v, vinv;
  int rank = 0;
};

enum SnfWant : unsigned { want_u = 1, want_uinv = 2, want_v = 4, want_vinv = 8 };

FullSNF full_snf(IntMatrix a, unsigned want);

}  // namespace sspec::detail
