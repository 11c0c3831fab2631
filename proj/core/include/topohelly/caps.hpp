#pragma once

#include <cstddef>

namespace topohelly {

// Enumeration limits.  All checks that walk the subset lattice or the
// induced-subcomplex lattice take a Caps value; the defaults keep the full
// pipeline at desk scale (minutes, not hours).
struct Caps {
  // Largest family size for which subfamily enumeration is attempted.
  int max_family = 12;
  // Largest nerve vertex count for Leray-number enumeration (2^V induced
  // subcomplexes).
  int max_leray_vertices = 14;
  // Hard ceiling on non-empty subfamily intersections visited per family.
  std::size_t max_subfamilies = 1u << 20;
  // Hard ceiling on cells of any single complex fed to homology.
  std::size_t max_cells = 200000;
};

}  // namespace topohelly
