#pragma once

// The tangent-cone side: w-dominated monomials on roots^v. Domination only
// sees the support, so everything reduces to the simplicial complex of
// dominated square-free supports and its f-vector.

#include <cstdint>
#include <span>
#include <vector>

#include "sympgrass/bigint.hpp"
#include "sympgrass/grid.hpp"
#include "sympgrass/poset.hpp"

namespace sympgrass {

/// Faces are bitmasks over grid().roots(), so |roots| <= 64 (d <= 10).
class DominatedComplex {
 public:
  /// Throws InputError unless v <= w and d <= 10.
  DominatedComplex(const IsotropicSignature& v, const IsotropicSignature& w);

  const VGrid& grid() const noexcept { return grid_; }
  const IsotropicSignature& w() const noexcept { return w_; }

  /// Every face, the empty one first, in DFS order.
  std::span<const std::uint64_t> faces() const noexcept { return faces_; }
  std::vector<GridPoint> face_points(std::uint64_t face) const;

  /// f[i] = number of faces with i points, i = 0..dimension().
  const std::vector<BigInt>& f_vector() const noexcept { return f_; }
  int dimension() const noexcept { return static_cast<int>(f_.size()) - 1; }
  const BigInt& multiplicity() const noexcept { return f_.back(); }
  std::vector<std::uint64_t> maximum_faces() const;

  /// Number of dominated monomials of degree m: sum_i f_i C(m-1, i-1).
  BigInt hilbert_value(int m) const;
  std::vector<BigInt> hilbert_function(int max_degree) const;

  /// Numerator of the Hilbert series over (1-t)^dimension().
  std::vector<BigInt> h_vector() const;

  bool is_downward_closed() const;

 private:
  VGrid grid_;
  IsotropicSignature w_;
  std::vector<std::uint64_t> faces_;
  std::vector<BigInt> f_;
};

/// Coefficient of t^m in h(t) / (1-t)^dim.
BigInt hilbert_from_h_vector(std::span<const BigInt> h, int dim, int m);

/// The common value of the k-th forward differences of `values`, i.e. k!
/// times the leading coefficient of a degree-k interpolating polynomial.
/// Throws InternalError if the values do not fit a polynomial of degree k.
BigInt normalized_leading_coefficient(std::span<const BigInt> values, int k);

/// Multiplicity read off the Hilbert function alone: the (dim-1)-th
/// difference of HF on m = dim..2*dim+5, with the fit checked on the extra
/// points.
BigInt multiplicity_from_hilbert_polynomial(const DominatedComplex& complex);

BigInt hilbert_value(const IsotropicSignature& v, const IsotropicSignature& w, int m);
BigInt multiplicity(const IsotropicSignature& v, const IsotropicSignature& w);
int tangent_cone_dimension(const IsotropicSignature& v, const IsotropicSignature& w);

}  // namespace sympgrass
