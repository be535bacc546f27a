#pragma once

// Multiplicity as a count of #-symmetric tuples of nonintersecting lattice
// paths on the PosA grid, one path per point of mon_w.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympgrass/bigint.hpp"
#include "sympgrass/grid.hpp"
#include "sympgrass/poset.hpp"

namespace sympgrass {

/// Points from start to finish; each step raises the row to the next row
/// outside v or the column to the next column in v.
using LatticePath = std::vector<GridPoint>;

struct PathEndpoints {
  GridPoint start;   // (least r' outside v with r' > c, c)
  GridPoint finish;  // (r, greatest c' in v with c' < r)
};

/// Throws InputError unless beta lies in PosA for v.
PathEndpoints endpoints(const IndexSet& v, GridPoint beta);

/// Every lattice path from start to finish inside PosA.
std::vector<LatticePath> lattice_paths(const IndexSet& v, GridPoint start, GridPoint finish);

/// Length equals |rows in [r..R]| + |v ∩ [c..C]| - 1 for endpoints (r,c), (R,C).
bool satisfies_length_identity(const IndexSet& v, const LatticePath& path);

/// Pointwise #, listed from start to finish again.
LatticePath mirror_path(const LatticePath& path, int d);

struct PathSystem {
  std::vector<GridPoint> sources;  // mon_w, ordered by start column
  std::vector<LatticePath> paths;  // paths[i] belongs to sources[i]

  bool operator==(const PathSystem&) const = default;
};

bool is_nonintersecting(const PathSystem& system);
/// beta_j = beta_k# implies path_j = path_k#.
bool is_symmetric(const PathSystem& system, int d);

/// All nonintersecting systems for mon_w, restricted to the #-symmetric ones
/// unless `symmetric` is false. Requires v <= w.
std::vector<PathSystem> enumerate_path_systems(const IsotropicSignature& v, const IsotropicSignature& w,
                                               bool symmetric = true);
BigInt count_path_systems(const IsotropicSignature& v, const IsotropicSignature& w, bool symmetric = true);

enum class RenderFormat { Svg, Ascii };

/// "svg" or "ascii"; anything else is an InputError.
RenderFormat parse_render_format(std::string_view name);

/// One panel per system, or a bare grid when `systems` is empty.
std::string render(const IsotropicSignature& v, const IsotropicSignature& w, std::span<const PathSystem> systems,
                   RenderFormat format);

}  // namespace sympgrass
