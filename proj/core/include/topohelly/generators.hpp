#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "topohelly/family.hpp"

namespace topohelly {

/// Deterministic random source.  mt19937_64's output stream is pinned by the
/// standard; draws go through rejection sampling because the standard
/// library's distributions are not portable across implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind {
  boxes,
  annuli,
  punctured_regions,
  discrete_sets,
  adversarial,
};

GeneratorKind kind_from_string(const std::string& s);
std::string kind_to_string(GeneratorKind k);

/// Seeded instance constructor.  The seed fully determines the output; the
/// same spec always serializes to the same bytes.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::boxes;
  int ambient_dim = 2;
  std::vector<int> extent = {16, 16};  // grid cells per axis
  int n = 4;
  std::uint64_t seed = 0;

  // boxes / punctured regions: side length range in cells
  int box_min = 2;
  int box_max = 5;

  // annuli
  int annulus_max_outer = 5;
  bool concentric = false;
  int mixed_boxes = 0;  // trailing members of an annuli family become boxes

  // punctured regions
  int punctures_max = 2;

  // discrete-sets: "complement-singletons" | "random" | "disjoint"
  // adversarial: "disconnected-intersection" | "offset-annuli" |
  //              "annulus-solo" | "disjoint-boxes"
  std::string pattern;
};

AnyFamily generate(const GeneratorSpec& spec);

/// Sup-norm ring of grid squares whose centers lie at distance
/// [r_inner, r_outer] from the given grid vertex.  Validated to be connected
/// with unreduced Betti numbers (1, 1).
CubicalComplex discretize_annulus(const std::vector<int>& center, int r_inner,
                                  int r_outer, const std::vector<int>& extent);

/// Axis-aligned box of grid cells, [lo, lo+size) per axis, as a closed
/// cubical complex.
CubicalComplex grid_box(const std::vector<int>& lo, const std::vector<int>& size,
                        const std::vector<int>& extent);

/// The full grid as a cubical complex (the ambient for generated families).
CubicalComplex full_grid(const std::vector<int>& extent);

}  // namespace topohelly
