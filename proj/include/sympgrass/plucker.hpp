#pragma once

// The affine patch around e^v: a 2d x d matrix, symmetric about the
// anti-diagonal, whose maximal minors are the Plücker coordinates f_theta
// restricted to the patch.

#include <string>
#include <vector>

#include "sympgrass/grid.hpp"
#include "sympgrass/polynomial.hpp"
#include "sympgrass/poset.hpp"
#include "sympgrass/smt.hpp"

namespace sympgrass {

struct PatchEntry {
  int sign = 0;                    // 0 for a constant entry
  int constant = 0;                // 0 or 1 when sign == 0
  GridPoint variable{};            // meaningful when sign != 0

  Polynomial polynomial() const;
  bool operator==(const PatchEntry&) const = default;
};

class PatchMatrix {
 public:
  /// Row v_i is the i-th unit row. Row r outside v, column c = v_j holds
  /// sign(r)·X_beta with beta = (r,c) if r <= c*, else (c*, r*), and
  /// sign(r) = -1 exactly when r <= d.
  explicit PatchMatrix(IsotropicSignature v);

  int d() const noexcept { return v_.d(); }
  const IsotropicSignature& v() const noexcept { return v_; }
  /// 1-based row r in [1..2d] and column j in [1..d].
  const PatchEntry& entry(int r, int j) const;

  /// One row per line, entries tab-separated ("0", "1", "-X(1,9)", ...).
  std::string str() const;

 private:
  IsotropicSignature v_;
  std::vector<PatchEntry> entries_;
};

/// The minor on the rows of theta; homogeneous of degree |theta \ v|.
Polynomial f_theta(const PatchMatrix& matrix, const IndexSet& theta);
Polynomial f_theta(const IsotropicSignature& v, const IndexSet& theta);

/// f_theta for theta the first component of ap_to_theta(pair).
Polynomial f_ap(const PatchMatrix& matrix, const AdmissiblePair& pair);
Polynomial f_ap(const IsotropicSignature& v, const AdmissiblePair& pair);

}  // namespace sympgrass
