#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sympgrass/errors.hpp"
#include "sympgrass/monw.hpp"

using namespace sympgrass;

namespace {

IndexSet random_set(std::mt19937_64& rng, int d, int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(d);
  return IndexSet::from_unsorted(n, all);
}

}  // namespace

TEST_CASE("mon_w on the worked instances") {
  const auto v = IsotropicSignature::parse("1,2,3,6,7", 5);
  const auto w = IsotropicSignature::parse("3,5,7,9,10", 5);
  CHECK(mon_w(v, w).str() == "{(5,2), (9,6), (10,1)}");
  CHECK(mon_w(v, v).empty());
  CHECK_THROWS_AS(mon_w(w, v), InputError);

  const auto v23 = IsotropicSignature::parse("1,2,3,4,5,11,12,13,14,19,20,22,23,26,29,30,31,32,37,38,39,40,41", 23);
  const auto w23 = IsotropicSignature::parse("4,5,9,10,14,17,18,21,23,25,27,28,31,32,34,35,36,39,40,41,44,45,46", 23);
  CHECK(mon_w(v23, w23).str() ==
        "{(9,3), (10,2), (17,13), (18,12), (21,20), (25,22), (27,26), (28,19), (34,30), (35,29), (36,11), "
        "(44,38), (45,37), (46,1)}");
}

TEST_CASE("mon_w is the unique matching, exhaustively") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& v : enumerate_index_sets(d, 2 * d)) {
      for (const auto& w : enumerate_index_sets(d, 2 * d)) {
        if (!leq(v, w)) continue;
        const auto brute = oracle::matchings({v.begin(), v.end()}, {w.begin(), w.end()});
        REQUIRE(brute.size() == 1);
        CHECK(mon_w(v, w).support() == brute.front());
        CHECK(mon_w_reference(v, w) == mon_w(v, w));
      }
    }
  }
}

TEST_CASE("mon_w agrees with the exhaustive search on random pairs") {
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 1000) {
    const int d = 1 + static_cast<int>(rng() % 8);
    IndexSet a = random_set(rng, d, 2 * d);
    IndexSet b = random_set(rng, d, 2 * d);
    const IndexSet v = meet(a, b);
    const IndexSet w = join(a, b);
    CHECK(mon_w_reference(v, w) == mon_w(v, w));
    ++tested;
  }
}

TEST_CASE("conditions D and E") {
  for (int d = 1; d <= 4; ++d) {
    const auto all = enumerate_isotropic(d);
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (!leq(v, w)) continue;
        const GridMonomial m = mon_w(v, w);
        CHECK(m.degree() == v_degree(w, v));
        CHECK(satisfies_condition_b(m.support()));
        CHECK(dominates_monomial(w, v, m));
        CHECK(dominator(v, m) == w);
        if (d > 3) continue;
        for (const auto& u : enumerate_index_sets(d, 2 * d)) {
          if (dominates_monomial(u, v, m)) CHECK(leq(w, u));
        }
      }
    }
  }
}

TEST_CASE("mon_w commutes with sharp") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      for (const auto& w : enumerate_index_sets(d, 2 * d)) {
        if (!leq(v, w)) continue;
        const GridMonomial m = mon_w(v, w);
        CHECK(mon_w(v, sharp(w)) == mirror_monomial(m));
        CHECK((mirror_monomial(m) == m) == (sharp(w) == w));
      }
    }
  }
}

TEST_CASE("diagonal points count the change in eps-degree") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      for (const auto& w : enumerate_isotropic(d)) {
        if (!leq(v, w)) continue;
        const GridMonomial m = mon_w(v, w);
        int diagonal = 0;
        for (GridPoint p : m.support()) {
          const bool low = p.c < p.r && p.r <= d;
          const bool high = d < p.c && p.c < p.r;
          const bool diag = dual_index(p.r, d) == p.c && p.c <= d && d < p.r;
          CHECK((low || high || diag));
          diagonal += on_diagonal(p, d) ? 1 : 0;
        }
        CHECK(diagonal == eps_degree(w) - eps_degree(v));
        if (v == epsilon(d)) CHECK(diagonal == eps_degree(w));
      }
    }
  }
}

TEST_CASE("the degree relation is relative, not absolute, away from epsilon") {
  const auto v = IsotropicSignature::parse("1,2,3,6,7", 5);
  const auto w = IsotropicSignature::parse("3,5,7,9,10", 5);
  int diagonal = 0;
  for (GridPoint p : mon_w(v, w).support()) diagonal += on_diagonal(p, 5) ? 1 : 0;
  CHECK(diagonal == 1);
  CHECK(eps_degree(w) == 3);
  CHECK(eps_degree(v) == 2);
}

TEST_CASE("mirror-closed posC supports stay dominated") {
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 4; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      const auto pos = VGrid(v).pos_c();
      for (const auto& w : enumerate_isotropic(d)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pos.size()); ++mask) {
          if (d == 4 && rng() % 8 != 0) continue;
          std::vector<GridPoint> pts;
          for (std::size_t i = 0; i < pos.size(); ++i) {
            if (mask >> i & 1u) pts.push_back(pos[i]);
          }
          if (!dominates_points(w, v, pts)) continue;
          auto doubled = pts;
          for (GridPoint p : pts) doubled.push_back(mirror_point(p, d));
          CHECK(dominates_points(w, v, doubled));
        }
      }
    }
  }
}
