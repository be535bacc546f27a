#pragma once

// Exact polynomials in the variables X_(r,c) with big-integer coefficients.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sympgrass/bigint.hpp"
#include "sympgrass/grid.hpp"

namespace sympgrass {

/// Sorted (variable, exponent) list with exponents >= 1; the empty list is 1.
using Monomial = std::vector<std::pair<GridPoint, int>>;

int degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
Monomial square_free_monomial(std::vector<GridPoint> points);
/// "X(5,1)·X(6,2)^2", or "1" for the empty monomial.
std::string to_string(const Monomial& m);

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(BigInt constant);  // NOLINT

  static Polynomial variable(GridPoint p, BigInt coefficient = 1);
  static Polynomial term(Monomial m, BigInt coefficient);

  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;

  /// -1 for the zero polynomial; the top degree otherwise.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

  /// "+1·X(5,1)·X(6,2) -1·X(5,2)·X(6,1)", terms in increasing monomial order;
  /// "0" for the zero polynomial.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  std::map<Monomial, BigInt> terms_;
};

}  // namespace sympgrass
