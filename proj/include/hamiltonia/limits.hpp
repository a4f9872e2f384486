#pragma once

#include <cstdint>

namespace hamiltonia {

// Size guards for desk-scale computation.  Every expensive entry point takes
// a Limits value; exceeding a guard raises cap_error, never UB or an OOM.
struct Limits {
  std::int64_t order_cap = 10'000'000;  // refuse larger groups outright
  int element_cap = 20'000;             // largest materialized element table
  int lattice_cap = 400;                // largest order admitted to lattice work
  int degree_cap = 10'000;              // largest permutation degree
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace hamiltonia
