#pragma once

// Good admissible pairs, the eight variable orders on roots^v, and the
// certificate that the f_pi of good pairs have initial terms mon_theta and
// cut out a monomial ideal with the right Hilbert function.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympgrass/bigint.hpp"
#include "sympgrass/grid.hpp"
#include "sympgrass/polynomial.hpp"
#include "sympgrass/smt.hpp"

namespace sympgrass {

enum class OrderScheme { HomogeneousLex, ReverseLex };

std::string to_string(OrderScheme s);
/// "lex" or "revlex".
OrderScheme parse_order_scheme(std::string_view name);

/// One of the eight variable orders >_1..>_8, applied by the same row/column
/// rule to every point of roots^v, plus a graded monomial scheme.
class TermOrder {
 public:
  /// Throws InputError unless 1 <= index <= 8.
  TermOrder(int index, OrderScheme scheme);

  int index() const noexcept { return index_; }
  OrderScheme scheme() const noexcept { return scheme_; }

  /// a >_index b.
  bool variable_greater(GridPoint a, GridPoint b) const noexcept;
  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  int index_;
  OrderScheme scheme_;
};

struct GoodPair {
  AdmissiblePair pair;
  IndexSet theta;
  std::vector<GridPoint> mon_theta;  // a v-chain in posC, rows descending
};

/// Admissible (t,u) with v <= u, t not <= w, and mon_w(v, theta) a v-chain
/// inside posC.
std::vector<GoodPair> good_pairs(const IsotropicSignature& v, const IsotropicSignature& w);

/// The good pair with mon_theta = chain. Throws InputError when the chain is
/// not a posC v-chain or w already dominates it.
GoodPair chain_to_good_pair(const IsotropicSignature& v, const IsotropicSignature& w,
                            std::vector<GridPoint> chain);

struct InitialTerm {
  Monomial monomial;
  BigInt coefficient;
};

/// Throws InputError on the zero polynomial.
InitialTerm initial_term(const Polynomial& f, const TermOrder& order);

struct GrobnerViolation {
  GoodPair good;
  Monomial expected;
  InitialTerm found;
};

struct GrobnerReport {
  int order_index = 0;
  OrderScheme scheme = OrderScheme::HomogeneousLex;
  std::size_t good_pair_count = 0;
  std::vector<GrobnerViolation> violations;
  /// mon_theta occurs in f_pi with coefficient ±1 for every good pair.
  bool unit_coefficients = true;
  std::vector<BigInt> avoiding_counts;  // monomials divisible by no mon_theta
  std::vector<BigInt> hilbert_values;
  bool counting_ok = true;
};

GrobnerReport certify_grobner(const IsotropicSignature& v, const IsotropicSignature& w, const TermOrder& order,
                              int max_degree);

/// Degree-m monomials on roots^v divisible by no good mon_theta, m = 0..max_degree.
std::vector<BigInt> count_avoiding_monomials(const VGrid& grid, const std::vector<GoodPair>& good, int max_degree);

}  // namespace sympgrass
