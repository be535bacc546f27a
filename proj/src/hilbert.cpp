#include "sympgrass/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "sympgrass/errors.hpp"

namespace sympgrass {

DominatedComplex::DominatedComplex(const IsotropicSignature& v, const IsotropicSignature& w)
    : grid_(v), w_(w) {
  if (!leq(v, w)) throw InputError("need v <= w, got v=" + v.str() + " w=" + w.str());
  const auto& roots = grid_.roots();
  if (roots.size() > 64) throw InputError("dominated complex: d <= 10 required");

  std::vector<GridPoint> current;
  std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t next, std::uint64_t face) {
    faces_.push_back(face);
    for (std::size_t i = next; i < roots.size(); ++i) {
      const GridPoint p = roots[i];
      if (p.r > p.c && undominated_chain_through(w_, v, current, p)) continue;
      current.push_back(p);
      extend(i + 1, face | (std::uint64_t{1} << i));
      current.pop_back();
    }
  };
  extend(0, 0);

  for (std::uint64_t face : faces_) {
    const auto size = static_cast<std::size_t>(std::popcount(face));
    if (f_.size() <= size) f_.resize(size + 1);
    f_[size] += 1;
  }
}

std::vector<GridPoint> DominatedComplex::face_points(std::uint64_t face) const {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < grid_.roots().size(); ++i) {
    if (face >> i & 1u) out.push_back(grid_.roots()[i]);
  }
  return out;
}

std::vector<std::uint64_t> DominatedComplex::maximum_faces() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t face : faces_) {
    if (std::popcount(face) == dimension()) out.push_back(face);
  }
  return out;
}

BigInt DominatedComplex::hilbert_value(int m) const {
  if (m < 0) throw InputError("hilbert_value: negative degree");
  if (m == 0) return 1;
  BigInt total = 0;
  for (int i = 1; i <= dimension(); ++i) total += f_[i] * binomial(m - 1, i - 1);
  return total;
}

std::vector<BigInt> DominatedComplex::hilbert_function(int max_degree) const {
  std::vector<BigInt> out;
  for (int m = 0; m <= max_degree; ++m) out.push_back(hilbert_value(m));
  return out;
}

std::vector<BigInt> DominatedComplex::h_vector() const {
  const int dim = dimension();
  std::vector<BigInt> h(dim + 1);
  for (int i = 0; i <= dim; ++i) {
    // f_i t^i (1-t)^(dim-i)
    for (int k = 0; k <= dim - i; ++k) {
      BigInt term = f_[i] * binomial(dim - i, k);
      if (k % 2) term = -term;
      h[i + k] += term;
    }
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

bool DominatedComplex::is_downward_closed() const {
  std::vector<std::uint64_t> sorted(faces_.begin(), faces_.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t face : sorted) {
    for (std::uint64_t rest = face; rest; rest &= rest - 1) {
      const std::uint64_t smaller = face & ~(rest & -rest);
      if (!std::binary_search(sorted.begin(), sorted.end(), smaller)) return false;
    }
  }
  return true;
}

BigInt hilbert_from_h_vector(std::span<const BigInt> h, int dim, int m) {
  BigInt total = 0;
  for (int k = 0; k < static_cast<int>(h.size()) && k <= m; ++k) {
    total += h[k] * (dim == 0 ? BigInt(m == k ? 1 : 0) : binomial(m - k + dim - 1, dim - 1));
  }
  return total;
}

BigInt normalized_leading_coefficient(std::span<const BigInt> values, int k) {
  if (k < 0 || static_cast<int>(values.size()) < k + 1) {
    throw InputError("normalized_leading_coefficient: need at least k+1 values");
  }
  std::vector<BigInt> diff(values.begin(), values.end());
  for (int step = 0; step < k; ++step) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  for (const BigInt& x : diff) ensure(x == diff.front(), "values do not fit a polynomial of the given degree");
  return diff.front();
}

BigInt multiplicity_from_hilbert_polynomial(const DominatedComplex& complex) {
  const int dim = complex.dimension();
  if (dim == 0) return complex.hilbert_value(0);
  std::vector<BigInt> values;
  for (int m = dim; m <= 2 * dim + 5; ++m) values.push_back(complex.hilbert_value(m));
  return normalized_leading_coefficient(values, dim - 1);
}

BigInt hilbert_value(const IsotropicSignature& v, const IsotropicSignature& w, int m) {
  return DominatedComplex(v, w).hilbert_value(m);
}

BigInt multiplicity(const IsotropicSignature& v, const IsotropicSignature& w) {
  return DominatedComplex(v, w).multiplicity();
}

int tangent_cone_dimension(const IsotropicSignature& v, const IsotropicSignature& w) {
  return DominatedComplex(v, w).dimension();
}

}  // namespace sympgrass
