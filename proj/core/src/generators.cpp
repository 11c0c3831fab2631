#include "topohelly/generators.hpp"

#include <algorithm>
#include <cmath>

#include "topohelly/errors.hpp"
#include "topohelly/homology.hpp"
#include "topohelly/nerve.hpp"

namespace topohelly {

int SeededRng::uniform_int(int lo, int hi) {
  if (lo > hi) throw malformed_input_error("empty range for uniform_int");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<int>(draw % span);
}

GeneratorKind kind_from_string(const std::string& s) {
  if (s == "boxes") return GeneratorKind::boxes;
  if (s == "annuli") return GeneratorKind::annuli;
  if (s == "punctured-regions") return GeneratorKind::punctured_regions;
  if (s == "discrete-sets") return GeneratorKind::discrete_sets;
  if (s == "adversarial") return GeneratorKind::adversarial;
  throw malformed_input_error("unknown generator kind: " + s);
}

std::string kind_to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::boxes: return "boxes";
    case GeneratorKind::annuli: return "annuli";
    case GeneratorKind::punctured_regions: return "punctured-regions";
    case GeneratorKind::discrete_sets: return "discrete-sets";
    case GeneratorKind::adversarial: return "adversarial";
  }
  throw malformed_input_error("unknown generator kind");
}

CubicalComplex full_grid(const std::vector<int>& extent) {
  const int d = static_cast<int>(extent.size());
  std::vector<int> lo(d, 0);
  return grid_box(lo, extent, extent);
}

CubicalComplex grid_box(const std::vector<int>& lo,
                        const std::vector<int>& size,
                        const std::vector<int>& extent) {
  const int d = static_cast<int>(extent.size());
  if (static_cast<int>(lo.size()) != d || static_cast<int>(size.size()) != d)
    throw malformed_input_error("box parameters do not match grid dimension");
  for (int a = 0; a < d; ++a) {
    if (size[a] < 1 || lo[a] < 0 || lo[a] + size[a] > extent[a])
      throw infeasible_parameters_error("box does not fit the grid");
  }
  std::vector<Cube> tops;
  std::vector<int> pos = lo;
  while (true) {
    Cube c;
    c.base = pos;
    c.extent = (1u << d) - 1;
    tops.push_back(c);
    int a = 0;
    while (a < d) {
      if (++pos[a] < lo[a] + size[a]) break;
      pos[a] = lo[a];
      ++a;
    }
    if (a == d) break;
  }
  return CubicalComplex::from_cubes(d, tops);
}

CubicalComplex discretize_annulus(const std::vector<int>& center, int r_inner,
                                  int r_outer,
                                  const std::vector<int>& extent) {
  if (extent.size() != 2 || center.size() != 2)
    throw malformed_input_error("annuli are two-dimensional");
  if (r_inner <= 0 || r_inner >= r_outer)
    throw infeasible_parameters_error(
        "annulus needs 0 < r_inner < r_outer");
  for (int a = 0; a < 2; ++a)
    if (center[a] - r_outer < 0 || center[a] + r_outer > extent[a])
      throw infeasible_parameters_error("annulus exceeds the grid");

  // A square with lower corner (x, y) has center distance
  // max |2(x - cx) + 1| / 2 in the sup norm; the doubled distances are odd.
  std::vector<Cube> tops;
  for (int x = center[0] - r_outer; x < center[0] + r_outer; ++x)
    for (int y = center[1] - r_outer; y < center[1] + r_outer; ++y) {
      const int dx = std::abs(2 * (x - center[0]) + 1);
      const int dy = std::abs(2 * (y - center[1]) + 1);
      const int dist = std::max(dx, dy);
      if (dist >= 2 * r_inner + 1 && dist <= 2 * r_outer - 1) {
        Cube c;
        c.base = {x, y};
        c.extent = 3;
        tops.push_back(c);
      }
    }
  if (tops.empty())
    throw infeasible_parameters_error("annulus contains no squares");
  CubicalComplex ring = CubicalComplex::from_cubes(2, tops);

  const std::vector<long> betti =
      betti_numbers_field(chain_complex(ring), 0, {.check_boundary = false});
  bool is_ring = betti.size() >= 2 && betti[0] == 1 && betti[1] == 1;
  for (std::size_t p = 2; p < betti.size(); ++p) is_ring &= betti[p] == 0;
  if (!is_ring)
    throw infeasible_parameters_error(
        "annulus discretization is not a ring at these parameters");
  return ring;
}

namespace {

CubicalFamily boxes_family(const GeneratorSpec& spec, SeededRng& rng) {
  CubicalFamily f;
  f.ambient = full_grid(spec.extent);
  const int d = spec.ambient_dim;
  for (int i = 0; i < spec.n; ++i) {
    std::vector<int> size(d), lo(d);
    for (int a = 0; a < d; ++a) {
      const int smax = std::min(spec.box_max, spec.extent[a]);
      const int smin = std::min(spec.box_min, smax);
      size[a] = rng.uniform_int(smin, smax);
      lo[a] = rng.uniform_int(0, spec.extent[a] - size[a]);
    }
    f.names.push_back("F" + std::to_string(i + 1));
    f.members.push_back(grid_box(lo, size, spec.extent));
  }
  // Boxes are contractible and intersect in boxes; the member check is the
  // loud part of the advertised good-cover regime.
  for (const auto& m : f.members) {
    const HomologyResult h =
        reduced_homology(chain_complex(m), {.check_boundary = false});
    if (!h.trivial())
      throw internal_consistency_error("generated box is not contractible");
  }
  return f;
}

CubicalFamily annuli_family(const GeneratorSpec& spec, SeededRng& rng) {
  if (spec.ambient_dim != 2)
    throw malformed_input_error("annuli families are two-dimensional");
  CubicalFamily f;
  f.ambient = full_grid(spec.extent);
  const int rings = spec.n - std::clamp(spec.mixed_boxes, 0, spec.n);
  for (int i = 0; i < spec.n; ++i) {
    f.names.push_back("F" + std::to_string(i + 1));
    if (i >= rings) {
      std::vector<int> size(2), lo(2);
      for (int a = 0; a < 2; ++a) {
        const int smax = std::min(spec.box_max, spec.extent[a]);
        size[a] = rng.uniform_int(std::min(spec.box_min, smax), smax);
        lo[a] = rng.uniform_int(0, spec.extent[a] - size[a]);
      }
      f.members.push_back(grid_box(lo, size, spec.extent));
      continue;
    }
    int r_outer, r_inner;
    std::vector<int> center(2);
    if (spec.concentric) {
      // The ring family of the semialgebraic example: common outer radius,
      // strictly increasing inner radius.
      r_outer = spec.annulus_max_outer;
      r_inner = i + 1;
      if (r_inner >= r_outer)
        throw infeasible_parameters_error(
            "concentric family needs annulus_max_outer > n");
      center = {spec.extent[0] / 2, spec.extent[1] / 2};
    } else {
      const int cap = std::min({spec.annulus_max_outer, spec.extent[0] / 2,
                                spec.extent[1] / 2});
      if (cap < 2)
        throw infeasible_parameters_error("grid too small for annuli");
      r_outer = rng.uniform_int(2, cap);
      r_inner = rng.uniform_int(1, r_outer - 1);
      for (int a = 0; a < 2; ++a)
        center[a] = rng.uniform_int(r_outer, spec.extent[a] - r_outer);
    }
    f.members.push_back(
        discretize_annulus(center, r_inner, r_outer, spec.extent));
  }
  return f;
}

CubicalFamily punctured_family(const GeneratorSpec& spec, SeededRng& rng) {
  CubicalFamily f;
  f.ambient = full_grid(spec.extent);
  const int d = spec.ambient_dim;
  for (int i = 0; i < spec.n; ++i) {
    std::vector<int> size(d), lo(d);
    for (int a = 0; a < d; ++a) {
      const int smax = std::min(spec.box_max, spec.extent[a]);
      const int smin = std::min(std::max(spec.box_min, 3), smax);
      size[a] = rng.uniform_int(smin, smax);
      lo[a] = rng.uniform_int(0, spec.extent[a] - size[a]);
    }
    // Interior top cells are puncture candidates; removing them keeps the
    // region connected but opens codimension-zero holes.
    std::vector<std::vector<int>> interior;
    std::vector<int> pos(d);
    const auto collect = [&](auto&& self, int axis) -> void {
      if (axis == d) {
        interior.push_back(pos);
        return;
      }
      for (int v = lo[axis] + 1; v + 1 < lo[axis] + size[axis]; ++v) {
        pos[axis] = v;
        self(self, axis + 1);
      }
    };
    collect(collect, 0);

    int punctures = interior.empty()
                        ? 0
                        : rng.uniform_int(0, std::min<int>(spec.punctures_max,
                                                           interior.size()));
    std::set<std::vector<int>> removed;
    while (static_cast<int>(removed.size()) < punctures) {
      removed.insert(
          interior[rng.uniform_int(0, static_cast<int>(interior.size()) - 1)]);
    }

    std::vector<Cube> tops;
    std::vector<int> cur = lo;
    while (true) {
      if (!removed.count(cur)) {
        Cube c;
        c.base = cur;
        c.extent = (1u << d) - 1;
        tops.push_back(c);
      }
      int a = 0;
      while (a < d) {
        if (++cur[a] < lo[a] + size[a]) break;
        cur[a] = lo[a];
        ++a;
      }
      if (a == d) break;
    }
    CubicalComplex member = CubicalComplex::from_cubes(d, tops);
    const std::vector<long> betti =
        betti_numbers_field(chain_complex(member), 0, {.check_boundary = false});
    if (betti.empty() || betti[0] != 1)
      throw internal_consistency_error("punctured region is disconnected");
    f.names.push_back("F" + std::to_string(i + 1));
    f.members.push_back(std::move(member));
  }
  return f;
}

SimplicialFamily discrete_family(const GeneratorSpec& spec, SeededRng& rng) {
  SimplicialFamily f;
  const int n = spec.n;
  const std::string pattern =
      spec.pattern.empty() ? "complement-singletons" : spec.pattern;
  if (pattern == "complement-singletons") {
    // {[n] \ {i}} on n vertices: bounded VC dimension, no Helly property.
    std::vector<Simplex> verts;
    for (int v = 0; v < n; ++v) verts.push_back({v});
    f.ambient = build_simplicial(verts);
    for (int i = 0; i < n; ++i) {
      std::vector<Simplex> cells;
      for (int v = 0; v < n; ++v)
        if (v != i) cells.push_back({v});
      f.names.push_back("F" + std::to_string(i + 1));
      f.members.push_back(build_simplicial(cells));
    }
    return f;
  }
  if (pattern == "disjoint") {
    std::vector<Simplex> verts;
    for (int v = 0; v < n; ++v) verts.push_back({v});
    f.ambient = build_simplicial(verts);
    for (int i = 0; i < n; ++i) {
      f.names.push_back("F" + std::to_string(i + 1));
      f.members.push_back(build_simplicial({{i}}));
    }
    return f;
  }
  if (pattern == "random") {
    const int universe = std::max(2 * n, 4);
    std::vector<Simplex> verts;
    for (int v = 0; v < universe; ++v) verts.push_back({v});
    f.ambient = build_simplicial(verts);
    for (int i = 0; i < n; ++i) {
      std::vector<Simplex> cells;
      while (cells.empty()) {
        for (int v = 0; v < universe; ++v)
          if (rng.uniform_int(0, 2) == 0) cells.push_back({v});
      }
      f.names.push_back("F" + std::to_string(i + 1));
      f.members.push_back(build_simplicial(cells));
    }
    return f;
  }
  throw malformed_input_error("unknown discrete-sets pattern: " + pattern);
}

CubicalFamily adversarial_family(const GeneratorSpec& spec, SeededRng& rng) {
  CubicalFamily f;
  const std::string pattern = spec.pattern;
  if (pattern == "disconnected-intersection") {
    // Two contractible C-shapes whose intersection is two parallel strips.
    const std::vector<int> extent = {5, 5};
    f.ambient = full_grid(extent);
    std::vector<Cube> a_cells, b_cells;
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        Cube c;
        c.base = {x, y};
        c.extent = 3;
        if (y == 0 || y == 4 || x == 0) a_cells.push_back(c);
        if (y == 0 || y == 4 || x == 4) b_cells.push_back(c);
      }
    f.names = {"F1", "F2"};
    f.members = {CubicalComplex::from_cubes(2, a_cells),
                 CubicalComplex::from_cubes(2, b_cells)};
    return f;
  }
  if (pattern == "offset-annuli") {
    // Two one-square-thick frames three cells apart overlap only along the
    // top and bottom rows: the intersection is a pair of disjoint arcs.
    const std::vector<int> extent = {11, 8};
    f.ambient = full_grid(extent);
    f.names = {"F1", "F2"};
    f.members = {discretize_annulus({4, 4}, 2, 3, extent),
                 discretize_annulus({7, 4}, 2, 3, extent)};
    return f;
  }
  if (pattern == "annulus-solo") {
    const std::vector<int> extent = {8, 8};
    f.ambient = full_grid(extent);
    f.names = {"F1"};
    f.members = {discretize_annulus({4, 4}, 1, 3, extent)};
    return f;
  }
  if (pattern == "disjoint-boxes") {
    // n disjoint unit boxes along the diagonal, two cells apart.
    const int n = spec.n;
    const std::vector<int> extent = {2 * n, 2 * n};
    f.ambient = full_grid(extent);
    for (int i = 0; i < n; ++i) {
      f.names.push_back("F" + std::to_string(i + 1));
      f.members.push_back(grid_box({2 * i, 2 * i}, {1, 1}, extent));
    }
    return f;
  }
  (void)rng;
  throw malformed_input_error("unknown adversarial pattern: " + pattern);
}

}  // namespace

AnyFamily generate(const GeneratorSpec& spec) {
  if (spec.kind != GeneratorKind::discrete_sets &&
      spec.kind != GeneratorKind::adversarial) {
    if (spec.ambient_dim < 1 || spec.ambient_dim > 3)
      throw malformed_input_error("ambient dimension must be 1, 2 or 3");
    if (static_cast<int>(spec.extent.size()) != spec.ambient_dim)
      throw malformed_input_error("extent must list one size per axis");
    for (int e : spec.extent)
      if (e < 2) throw malformed_input_error("grid extent must be >= 2");
  }
  if (spec.n < 0) throw malformed_input_error("n must be non-negative");

  SeededRng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::boxes:
      return boxes_family(spec, rng);
    case GeneratorKind::annuli:
      return annuli_family(spec, rng);
    case GeneratorKind::punctured_regions:
      return punctured_family(spec, rng);
    case GeneratorKind::discrete_sets:
      return discrete_family(spec, rng);
    case GeneratorKind::adversarial:
      return adversarial_family(spec, rng);
  }
  throw malformed_input_error("unknown generator kind");
}

}  // namespace topohelly
