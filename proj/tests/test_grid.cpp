#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sympgrass/errors.hpp"
#include "sympgrass/grid.hpp"

using namespace sympgrass;

namespace {

IsotropicSignature I(const char* text, int d) { return IsotropicSignature::parse(text, d); }

std::vector<GridPoint> P(std::initializer_list<GridPoint> pts) { return pts; }

std::vector<GridPoint> subset(const std::vector<GridPoint>& pool, std::uint64_t mask) {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1u) out.push_back(pool[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("grid point sets for a small v") {
  const VGrid g(I("1,2", 2));
  CHECK(g.roots() == P({{3, 1}, {3, 2}, {4, 1}}));
  CHECK(g.pos_c() == g.roots());
  CHECK(g.diagonal() == P({{3, 2}, {4, 1}}));
  CHECK(g.free_points().empty());
  CHECK(VGrid(I("1,2,3,6,7", 5)).roots().size() == 15);
}

TEST_CASE("roots count and the epsilon grid") {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      const VGrid g(v);
      CHECK(g.roots().size() == static_cast<std::size_t>(d * (d + 1) / 2));
      for (GridPoint p : g.diagonal()) CHECK(in_roots_c(v, p));
      for (GridPoint p : g.pos_c()) CHECK((in_roots_c(v, p) && in_pos_a(v, p)));
      if (d <= 4) {
        std::vector<GridPoint> brute = oracle::roots({v.begin(), v.end()}, d);
        std::sort(brute.begin(), brute.end());
        CHECK(brute == g.roots());
      }
    }
    const VGrid e(epsilon(d));
    CHECK(e.pos_a().size() == static_cast<std::size_t>(d * d));
    CHECK(e.pos_c() == e.roots());
  }
}

TEST_CASE("v-chains use sequence semantics") {
  CHECK(is_v_chain(P({{10, 1}, {9, 6}})));
  CHECK(is_v_chain(P({{5, 2}})));
  CHECK_FALSE(is_v_chain(P({{5, 2}, {9, 6}})));
  CHECK(as_chain(P({{5, 2}, {10, 1}})) == P({{10, 1}, {5, 2}}));
  CHECK_THROWS_AS(as_chain(P({{5, 2}, {9, 6}})), InputError);
}

TEST_CASE("s_chain") {
  const auto v = I("1,2", 2);
  CHECK(s_chain(v, P({{3, 2}})) == IndexSet::parse("1,3", 4));
  CHECK(s_chain(v, {}) == v.set());
  const IndexSet off = s_chain(v, P({{3, 1}}));
  CHECK(off == IndexSet::parse("2,3", 4));
  CHECK_FALSE(is_isotropic(off));
  CHECK_THROWS_AS(s_chain(v, P({{3, 1}, {4, 2}})), InputError);
  CHECK_THROWS_AS(s_chain(v, P({{2, 1}})), InputError);
}

TEST_CASE("domination of chains") {
  const auto v = I("1,2,3,6,7", 5);
  const auto w = I("3,5,7,9,10", 5);
  CHECK(s_chain(v, P({{5, 2}})) == IndexSet::parse("1,3,5,6,7", 10));
  CHECK(dominates_chain(w, v, P({{5, 2}})));
  CHECK(dominates_chain(w, v, {}));
  const VGrid grid(v);
  for (GridPoint p : grid.pos_c()) CHECK_FALSE(dominates_chain(v, v, P({p})));
}

TEST_CASE("domination of monomials") {
  const auto v = I("1,2,3,6,7", 5);
  const VGrid g(v);
  const auto free_points = g.free_points();
  CHECK(!free_points.empty());
  CHECK(dominates_monomial(v, v, GridMonomial::square_free(v, Ground::RootsC, free_points)));
  for (GridPoint p : g.pos_c()) {
    auto pts = free_points;
    pts.push_back(p);
    CHECK_FALSE(dominates_monomial(v, v, GridMonomial::square_free(v, Ground::RootsC, pts)));
  }
}

TEST_CASE("dominator") {
  const auto v = I("1,2", 2);
  CHECK(dominator(v, std::vector<GridPoint>{}) == v);
  CHECK(dominator(v, P({{4, 1}})) == I("2,4", 2));
  for (int d = 1; d <= 4; ++d) {
    for (const auto& u : enumerate_isotropic(d)) {
      const auto pos = VGrid(u).pos_c();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pos.size()); ++mask) {
        if (d == 4 && mask % 7 != 0) continue;
        const auto pts = subset(pos, mask);
        const auto x = dominator(u, pts);
        CHECK(dominates_points(x, u, pts));
        for (const auto& y : enumerate_isotropic(d)) {
          if (dominates_points(y, u, pts)) CHECK(leq(x, y));
        }
      }
    }
  }
}

TEST_CASE("domination agrees with the subset oracle and is downward closed") {
  for (int d = 1; d <= 3; ++d) {
    const auto all = enumerate_isotropic(d);
    for (const auto& v : all) {
      const auto roots = VGrid(v).roots();
      for (const auto& w : all) {
        if (!leq(v, w)) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << roots.size()); ++mask) {
          const auto pts = subset(roots, mask);
          const bool dom = dominates_points(w, v, pts);
          CHECK(dom == oracle::dominates({w.begin(), w.end()}, {v.begin(), v.end()}, pts));
          if (!dom) continue;
          for (std::size_t i = 0; i < roots.size(); ++i) {
            if (mask >> i & 1u) CHECK(dominates_points(w, v, subset(roots, mask & ~(std::uint64_t{1} << i))));
          }
          for (const auto& w2 : all) {
            if (leq(w, w2)) CHECK(dominates_points(w2, v, pts));
          }
        }
      }
    }
  }
}

TEST_CASE("domination only sees the support") {
  std::mt19937_64 rng(7);
  for (int d = 2; d <= 4; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      const auto roots = VGrid(v).roots();
      for (const auto& w : enumerate_isotropic(d)) {
        if (!leq(v, w)) continue;
        for (int trial = 0; trial < 8; ++trial) {
          const auto pts = subset(roots, rng() & ((std::uint64_t{1} << roots.size()) - 1));
          std::vector<GridTerm> terms;
          for (GridPoint p : pts) terms.push_back({p, 1 + static_cast<int>(rng() % 4)});
          const GridMonomial m(v, Ground::RootsC, terms);
          CHECK(dominates_monomial(w, v, m) == dominates_points(w, v, pts));
        }
      }
    }
  }
}

TEST_CASE("incremental chain check matches the full check") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      const auto roots = VGrid(v).roots();
      for (const auto& w : enumerate_isotropic(d)) {
        if (!leq(v, w)) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << roots.size()); ++mask) {
          const auto pts = subset(roots, mask);
          if (!dominates_points(w, v, pts)) continue;
          for (std::size_t i = 0; i < roots.size(); ++i) {
            if (mask >> i & 1u) continue;
            auto grown = pts;
            grown.push_back(roots[i]);
            CHECK(undominated_chain_through(w, v, pts, roots[i]).has_value() == !dominates_points(w, v, grown));
          }
        }
      }
    }
  }
}

TEST_CASE("mirror, up and down") {
  const int d = 5;
  CHECK(mirror_point({9, 6}, d) == GridPoint{5, 2});
  CHECK(mirror_point({10, 1}, d) == GridPoint{10, 1});
  CHECK(on_diagonal({10, 1}, d));
  CHECK(up({7, 3}, 4) == GridPoint{6, 2});
  CHECK(up({10, 1}, d) == GridPoint{10, 1});
  CHECK(down({10, 1}, d) == GridPoint{10, 1});
  for (int e = 1; e <= 4; ++e) {
    for (const auto& v : enumerate_isotropic(e)) {
      const VGrid grid(v);
      for (GridPoint p : grid.pos_a()) {
        CHECK(in_pos_a(v, mirror_point(p, e)));
        CHECK(mirror_point(mirror_point(p, e), e) == p);
        const GridPoint back = down(up(p, e), e);
        CHECK((back == p || back == mirror_point(p, e)));
      }
    }
  }
  const auto v = I("1,2,3,6,7", 5);
  const GridMonomial m(v, Ground::PosA, {{{5, 2}, 2}, {{10, 1}, 1}});
  CHECK(mirror_monomial(m) == GridMonomial(v, Ground::PosA, {{{9, 6}, 2}, {{10, 1}, 1}}));
  CHECK(mirror_monomial(mirror_monomial(m)) == m);
  CHECK(up_monomial(mirror_monomial(m)).str() == "{(5,2)^2, (10,1)}");
}

TEST_CASE("special monomials") {
  const auto v = I("1,2", 2);
  CHECK(is_special(GridMonomial(v, Ground::PosA, {{{3, 2}, 2}})));
  CHECK_FALSE(is_special(GridMonomial(v, Ground::PosA, {{{3, 2}, 1}})));
  CHECK_FALSE(is_special(GridMonomial::square_free(v, Ground::PosA, P({{4, 1}, {3, 2}}))));
  CHECK(is_special(GridMonomial(v, Ground::PosA, {{{4, 1}, 2}})));
  const auto v5 = I("1,2,3,6,7", 5);
  CHECK(is_special(GridMonomial::square_free(v5, Ground::PosA, P({{5, 2}, {9, 6}}))));
  CHECK_FALSE(is_special(GridMonomial::square_free(v5, Ground::PosA, P({{5, 2}}))));
}

TEST_CASE("grid monomials validate their ground") {
  const auto v = I("1,2", 2);
  CHECK_THROWS_AS(GridMonomial(v, Ground::RootsC, {{{1, 2}, 1}}), InputError);
  CHECK_THROWS_AS(GridMonomial(v, Ground::RootsC, {{{3, 1}, 0}}), InputError);
  CHECK_THROWS_AS(GridMonomial::square_free(v, Ground::RootsC, P({{3, 1}, {3, 1}})), InputError);
  const GridMonomial m(v, Ground::RootsC, {{{3, 1}, 1}, {{3, 1}, 2}});
  CHECK(m.degree() == 3);
  CHECK(m.multiplicity({3, 1}) == 3);
  CHECK(multiply(m, m).degree() == 6);
}
