#pragma once

#include <cstddef>

namespace monalg {

/// Explicit enumeration limits shared by the expensive searches.
struct Budget {
  std::size_t max_points = 2'000'000;  // lattice points, candidates, codewords
  std::size_t max_cycles = 100'000;    // induced cycles
  std::size_t max_cycle_vertices = 14; // graphs searched for cycles
  int degree_cap = 8;                  // v-number witness degree
};

}  // namespace monalg
