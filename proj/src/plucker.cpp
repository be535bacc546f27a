#include "sympgrass/plucker.hpp"

#include <bit>
#include <cstdint>
#include <map>

#include "sympgrass/errors.hpp"

namespace sympgrass {

Polynomial PatchEntry::polynomial() const {
  if (sign == 0) return Polynomial(BigInt(constant));
  return Polynomial::variable(variable, sign);
}

PatchMatrix::PatchMatrix(IsotropicSignature v) : v_(std::move(v)) {
  const int d = v_.d();
  for (int r = 1; r <= 2 * d; ++r) {
    for (int j = 0; j < d; ++j) {
      const int c = v_.set()[j];
      PatchEntry e;
      if (v_.contains(r)) {
        e.constant = r == c ? 1 : 0;
      } else {
        e.sign = r <= d ? -1 : 1;
        e.variable = r <= dual_index(c, d) ? GridPoint{r, c} : GridPoint{dual_index(c, d), dual_index(r, d)};
      }
      entries_.push_back(e);
    }
  }
}

const PatchEntry& PatchMatrix::entry(int r, int j) const {
  const int d = v_.d();
  if (r < 1 || r > 2 * d || j < 1 || j > d) throw InputError("patch matrix: entry index out of range");
  return entries_[static_cast<std::size_t>((r - 1) * d + (j - 1))];
}

std::string PatchMatrix::str() const {
  std::string out;
  for (int r = 1; r <= 2 * d(); ++r) {
    for (int j = 1; j <= d(); ++j) {
      const PatchEntry& e = entry(r, j);
      if (j > 1) out += '\t';
      if (e.sign == 0) {
        out += std::to_string(e.constant);
      } else {
        out += (e.sign < 0 ? "-X" : "X") + to_string(e.variable);
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

// Laplace expansion along the remaining row with the fewest non-zero
// entries, memoised on (rows, columns) left.
class MinorExpander {
 public:
  MinorExpander(const PatchMatrix& matrix, std::vector<int> rows) : matrix_(matrix), rows_(std::move(rows)) {}

  Polynomial det() {
    const auto full = static_cast<std::uint32_t>((std::uint64_t{1} << rows_.size()) - 1);
    return expand(full, full);
  }

 private:
  Polynomial expand(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return Polynomial(BigInt(1));
    const auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int pivot = -1;
    int best = 1 << 30;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!(rows >> i & 1u)) continue;
      int nonzero = 0;
      for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (cols >> j & 1u) nonzero += is_zero(i, j) ? 0 : 1;
      }
      if (nonzero < best) {
        best = nonzero;
        pivot = static_cast<int>(i);
      }
    }

    // Sign (-1)^(i+j) with i, j positions among the remaining rows/columns.
    const int row_pos = std::popcount(rows & ((1u << pivot) - 1));
    Polynomial total;
    int col_pos = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (!(cols >> j & 1u)) continue;
      if (!is_zero(static_cast<std::size_t>(pivot), j)) {
        Polynomial term = entry(static_cast<std::size_t>(pivot), j) * expand(rows & ~(1u << pivot), cols & ~(1u << j));
        if ((row_pos + col_pos) % 2) term = -term;
        total += term;
      }
      ++col_pos;
    }
    memo_.emplace(key, total);
    return total;
  }

  const PatchEntry& raw(std::size_t i, std::size_t j) const {
    return matrix_.entry(rows_[i], static_cast<int>(j) + 1);
  }
  bool is_zero(std::size_t i, std::size_t j) const {
    const PatchEntry& e = raw(i, j);
    return e.sign == 0 && e.constant == 0;
  }
  Polynomial entry(std::size_t i, std::size_t j) const { return raw(i, j).polynomial(); }

  const PatchMatrix& matrix_;
  std::vector<int> rows_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo_;
};

}  // namespace

Polynomial f_theta(const PatchMatrix& matrix, const IndexSet& theta) {
  if (theta.n() != 2 * matrix.d() || theta.size() != matrix.d()) {
    throw InputError("f_theta: theta=" + theta.str() + " is not in I(d,2d) for d=" + std::to_string(matrix.d()));
  }
  if (matrix.d() > 30) throw InputError("f_theta: d <= 30 required");
  std::vector<int> rows(theta.begin(), theta.end());
  Polynomial out = MinorExpander(matrix, std::move(rows)).det();
  ensure(out.is_zero() || (out.is_homogeneous() && out.degree() == v_degree(theta, matrix.v())),
         "f_theta: minor is not homogeneous of degree |theta \\ v|");
  return out;
}

Polynomial f_theta(const IsotropicSignature& v, const IndexSet& theta) { return f_theta(PatchMatrix(v), theta); }

Polynomial f_ap(const PatchMatrix& matrix, const AdmissiblePair& pair) {
  return f_theta(matrix, ap_to_theta(pair).theta);
}

Polynomial f_ap(const IsotropicSignature& v, const AdmissiblePair& pair) { return f_ap(PatchMatrix(v), pair); }

}  // namespace sympgrass
