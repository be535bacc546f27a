#pragma once

// The v-grid: points (r,c) with r outside v and c in v, v-chains, the
// s_chain action and domination of chains and monomials.
//
// Two ground sets are in play. RootsC is {(r,c) : r <= c*}, the variables of
// the tangent-cone coordinate ring. PosA is {(r,c) : r > c} without the c*
// restriction; it is where mon_w, the # mirror and the lattice paths live.
// PosC = RootsC ∩ PosA, and chains of a RootsC monomial only use its PosC part.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympgrass/poset.hpp"

namespace sympgrass {

struct GridPoint {
  int r = 0;
  int c = 0;

  auto operator<=>(const GridPoint&) const = default;
};

std::string to_string(GridPoint p);
std::ostream& operator<<(std::ostream& os, GridPoint p);

/// a > b in the chain order: a.r > b.r and a.c < b.c.
constexpr bool chain_greater(GridPoint a, GridPoint b) noexcept { return a.r > b.r && a.c < b.c; }
constexpr bool chain_comparable(GridPoint a, GridPoint b) noexcept {
  return chain_greater(a, b) || chain_greater(b, a);
}

constexpr bool on_diagonal(GridPoint p, int d) noexcept { return p.r == dual_index(p.c, d); }

/// (r,c)# = (c*, r*)
constexpr GridPoint mirror_point(GridPoint p, int d) noexcept {
  return {dual_index(p.c, d), dual_index(p.r, d)};
}

/// p if r <= c*, else p#.
constexpr GridPoint up(GridPoint p, int d) noexcept {
  return p.r <= dual_index(p.c, d) ? p : mirror_point(p, d);
}

/// p if r >= c*, else p#.
constexpr GridPoint down(GridPoint p, int d) noexcept {
  return p.r >= dual_index(p.c, d) ? p : mirror_point(p, d);
}

enum class Ground { RootsC, PosA };

std::string to_string(Ground g);

bool in_roots_c(const IndexSet& v, GridPoint p);
bool in_pos_a(const IndexSet& v, GridPoint p);
bool in_pos_c(const IndexSet& v, GridPoint p);

/// The point sets attached to v in I(d). Every list is sorted by (r, c).
class VGrid {
 public:
  explicit VGrid(IsotropicSignature v);

  int d() const noexcept { return v_.d(); }
  const IsotropicSignature& v() const noexcept { return v_; }

  const std::vector<GridPoint>& roots() const noexcept { return roots_; }
  const std::vector<GridPoint>& pos_c() const noexcept { return pos_c_; }
  const std::vector<GridPoint>& pos_a() const noexcept { return pos_a_; }
  const std::vector<GridPoint>& diagonal() const noexcept { return diagonal_; }
  /// roots \ posC: the points with r < c, which never occur in a chain.
  std::vector<GridPoint> free_points() const;

  std::optional<std::size_t> roots_index(GridPoint p) const;
  std::optional<std::size_t> pos_a_index(GridPoint p) const;

 private:
  IsotropicSignature v_;
  std::vector<GridPoint> roots_;
  std::vector<GridPoint> pos_c_;
  std::vector<GridPoint> pos_a_;
  std::vector<GridPoint> diagonal_;
};

struct GridTerm {
  GridPoint point;
  int multiplicity = 1;

  bool operator==(const GridTerm&) const = default;
};

/// A multiset of grid points, i.e. a monomial in the variables X_(r,c).
/// Canonical form: support sorted by (r, c), multiplicities >= 1.
class GridMonomial {
 public:
  GridMonomial(IndexSet v, Ground ground, std::vector<GridTerm> terms = {});

  static GridMonomial square_free(IndexSet v, Ground ground, std::span<const GridPoint> points);

  const IndexSet& base() const noexcept { return v_; }
  int d() const noexcept { return v_.n() / 2; }
  Ground ground() const noexcept { return ground_; }
  std::span<const GridTerm> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  int degree() const noexcept;
  int multiplicity(GridPoint p) const noexcept;
  std::vector<GridPoint> support() const;

  /// "{(5,2), (9,6)^2}"
  std::string str() const;

  bool operator==(const GridMonomial&) const = default;

 private:
  IndexSet v_;
  Ground ground_;
  std::vector<GridTerm> terms_;
};

std::ostream& operator<<(std::ostream& os, const GridMonomial& m);

/// Multiset union (monomial product). Both factors must share v and ground.
GridMonomial multiply(const GridMonomial& a, const GridMonomial& b);

/// Pointwise #. Needs a PosA monomial over v in I(d).
GridMonomial mirror_monomial(const GridMonomial& m);

/// Pointwise up(). Needs a PosA monomial over v in I(d).
GridMonomial up_monomial(const GridMonomial& m);

/// m = m# and every diagonal point has even multiplicity.
bool is_special(const GridMonomial& m);

/// Sequence semantics: seq[0] > seq[1] > ... in the chain order.
bool is_v_chain(std::span<const GridPoint> seq);

/// Points that are pairwise comparable, listed as a v-chain (rows
/// descending). Throws InputError otherwise.
std::vector<GridPoint> as_chain(std::span<const GridPoint> points);

/// (v \ {c_i}) ∪ {r_i}, an element of I(d,n). Throws InputError when the
/// points are not a chain of PosA points for v.
IndexSet s_chain(const IndexSet& v, std::span<const GridPoint> chain);

bool dominates_chain(const IndexSet& w, const IndexSet& v, std::span<const GridPoint> chain);

/// A chain among the r > c points of `points` that w does not dominate, if
/// any. Duplicates are ignored, so only the support matters.
std::optional<std::vector<GridPoint>> undominated_chain(const IndexSet& w, const IndexSet& v,
                                                        std::span<const GridPoint> points);

/// Like undominated_chain, restricted to chains of points ∪ {through} that
/// contain `through`.
std::optional<std::vector<GridPoint>> undominated_chain_through(const IndexSet& w, const IndexSet& v,
                                                                std::span<const GridPoint> points,
                                                                GridPoint through);

bool dominates_points(const IndexSet& w, const IndexSet& v, std::span<const GridPoint> points);
bool dominates_monomial(const IndexSet& w, const IndexSet& v, const GridMonomial& m);

/// The least element of I(d) dominating the points.
IsotropicSignature dominator(const IsotropicSignature& v, std::span<const GridPoint> points);
IsotropicSignature dominator(const IsotropicSignature& v, const GridMonomial& m);

}  // namespace sympgrass
