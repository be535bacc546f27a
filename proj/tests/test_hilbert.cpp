#include "doctest.h"
#include "oracles.hpp"
#include "sympgrass/errors.hpp"
#include "sympgrass/hilbert.hpp"
#include "sympgrass/smt.hpp"

using namespace sympgrass;

namespace {
IsotropicSignature I(const char* text, int d) { return IsotropicSignature::parse(text, d); }
}  // namespace

TEST_CASE("the smooth d=1 case") {
  const DominatedComplex c(I("1", 1), I("2", 1));
  CHECK(c.faces().size() == 2);
  CHECK(c.face_points(c.faces()[1]) == std::vector<GridPoint>{{2, 1}});
  CHECK(c.dimension() == 1);
  CHECK(c.multiplicity() == 1);
  CHECK(c.h_vector() == std::vector<BigInt>{1});
  CHECK(c.hilbert_function(4) == std::vector<BigInt>{1, 1, 1, 1, 1});
}

TEST_CASE("v = w is a polynomial ring on the free points") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      const VGrid g(v);
      const int n = static_cast<int>(g.free_points().size());
      const DominatedComplex c(v, v);
      CHECK(c.dimension() == n);
      CHECK(c.multiplicity() == 1);
      CHECK(c.h_vector() == std::vector<BigInt>{1});
      for (int i = 0; i <= n; ++i) CHECK(c.f_vector()[i] == binomial(n, i));
      for (int m = 0; m <= 5; ++m) {
        const BigInt expected = n == 0 ? BigInt(m == 0 ? 1 : 0) : binomial(n + m - 1, m);
        CHECK(c.hilbert_value(m) == expected);
      }
    }
  }
}

TEST_CASE("the d=5 worked instance") {
  const auto v = I("1,2,3,6,7", 5);
  const auto w = I("3,5,7,9,10", 5);
  const DominatedComplex c(v, w);
  CHECK(c.multiplicity() == 10);
  CHECK(c.maximum_faces().size() == 10);
  CHECK(multiplicity(v, w) == 10);
  CHECK(multiplicity_from_hilbert_polynomial(c) == 10);
  std::vector<BigInt> fit;
  for (int m = c.dimension(); m <= 2 * c.dimension() + 1; ++m) fit.push_back(c.hilbert_value(m));
  CHECK(normalized_leading_coefficient(fit, c.dimension() - 1) == 10);
  CHECK(tangent_cone_dimension(v, w) == c.dimension());
  CHECK(c.is_downward_closed());
}

TEST_CASE("Hilbert function equals the tableau count") {
  for (int d = 1; d <= 3; ++d) {
    const auto all = enumerate_isotropic(d);
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (!leq(v, w)) continue;
        const DominatedComplex c(v, w);
        const auto smt = count_sm(v, w, 5);
        for (int m = 0; m <= 5; ++m) CHECK(c.hilbert_value(m) == smt[m]);
      }
    }
  }
  // A fixed handful at d = 4.
  const auto all = enumerate_isotropic(4);
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = i; j < all.size(); j += 5) {
      if (!leq(all[i], all[j])) continue;
      const DominatedComplex c(all[i], all[j]);
      const auto smt = count_sm(all[i], all[j], 4);
      for (int m = 0; m <= 4; ++m) CHECK(c.hilbert_value(m) == smt[m]);
    }
  }
}

TEST_CASE("Hilbert function equals the brute-force monomial count") {
  for (int d = 1; d <= 3; ++d) {
    const auto all = enumerate_isotropic(d);
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (!leq(v, w)) continue;
        const DominatedComplex c(v, w);
        for (int m = 0; m <= 4; ++m) {
          CHECK(c.hilbert_value(m) == oracle::hilbert_brute({v.begin(), v.end()}, {w.begin(), w.end()}, d, m));
        }
      }
    }
  }
}

TEST_CASE("face census invariants") {
  for (int d = 1; d <= 4; ++d) {
    const auto all = enumerate_isotropic(d);
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (!leq(v, w)) continue;
        const DominatedComplex c(v, w);
        CHECK(c.is_downward_closed());
        CHECK(c.hilbert_value(0) == 1);
        for (std::uint64_t f : c.faces()) CHECK(dominates_points(w, v, c.face_points(f)));
        const auto h = c.h_vector();
        for (int m = 0; m <= 8; ++m) CHECK(hilbert_from_h_vector(h, c.dimension(), m) == c.hilbert_value(m));
        BigInt h1 = 0;
        for (const auto& x : h) h1 += x;
        CHECK(h1 == c.multiplicity());
        CHECK(multiplicity_from_hilbert_polynomial(c) == c.multiplicity());
        for (const auto& w2 : all) {
          if (!leq(w, w2)) continue;
          const DominatedComplex c2(v, w2);
          for (int m = 0; m <= 5; ++m) CHECK(c.hilbert_value(m) <= c2.hilbert_value(m));
        }
      }
    }
  }
}

TEST_CASE("finite differences") {
  const std::vector<BigInt> squares{0, 1, 4, 9, 16, 25};
  CHECK(normalized_leading_coefficient(squares, 2) == 2);
  CHECK_THROWS_AS(normalized_leading_coefficient(squares, 1), InternalError);
  CHECK_THROWS_AS(normalized_leading_coefficient(squares, 6), InputError);
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(DominatedComplex(I("2,4", 2), I("1,2", 2)), InputError);
  CHECK_THROWS_AS(DominatedComplex(I("1,2", 2), I("2,4", 2)).hilbert_value(-1), InputError);
}
