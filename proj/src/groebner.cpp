#include "sympgrass/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "sympgrass/errors.hpp"
#include "sympgrass/hilbert.hpp"
#include "sympgrass/monw.hpp"
#include "sympgrass/plucker.hpp"

namespace sympgrass {

std::string to_string(OrderScheme s) { return s == OrderScheme::HomogeneousLex ? "lex" : "revlex"; }

OrderScheme parse_order_scheme(std::string_view name) {
  if (name == "lex") return OrderScheme::HomogeneousLex;
  if (name == "revlex") return OrderScheme::ReverseLex;
  throw InputError("unknown term order scheme \"" + std::string(name) + "\" (expected lex or revlex)");
}

TermOrder::TermOrder(int index, OrderScheme scheme) : index_(index), scheme_(scheme) {
  if (index < 1 || index > 8) throw InputError("term order index must be in 1..8, got " + std::to_string(index));
}

bool TermOrder::variable_greater(GridPoint a, GridPoint b) const noexcept {
  switch (index_) {
    case 1: return a.r < b.r || (a.r == b.r && a.c > b.c);
    case 2: return a.c > b.c || (a.c == b.c && a.r < b.r);
    case 3: return a.r < b.r || (a.r == b.r && a.c < b.c);
    case 4: return a.c > b.c || (a.c == b.c && a.r > b.r);
    case 5: return a.c < b.c || (a.c == b.c && a.r < b.r);
    case 6: return a.r > b.r || (a.r == b.r && a.c > b.c);
    case 7: return a.c < b.c || (a.c == b.c && a.r > b.r);
    default: return a.r > b.r || (a.r == b.r && a.c < b.c);
  }
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Exponent differences, one entry per variable present in either side.
  std::vector<std::pair<GridPoint, int>> diff;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      diff.emplace_back(i->first, i->second);
      ++i;
    } else if (i == a.end() || j->first < i->first) {
      diff.emplace_back(j->first, -j->second);
      ++j;
    } else {
      if (i->second != j->second) diff.emplace_back(i->first, i->second - j->second);
      ++i;
      ++j;
    }
  }
  if (diff.empty()) return 0;
  auto greater = [&](const auto& x, const auto& y) { return variable_greater(x.first, y.first); };
  if (scheme_ == OrderScheme::HomogeneousLex) {
    const auto top = std::min_element(diff.begin(), diff.end(), greater);
    return top->second > 0 ? 1 : -1;
  }
  const auto bottom = std::max_element(diff.begin(), diff.end(), greater);
  return bottom->second < 0 ? 1 : -1;
}

namespace {

bool in_pos_c_chain(const IndexSet& v, const std::vector<GridPoint>& points) {
  for (GridPoint p : points) {
    if (!in_pos_c(v, p)) return false;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!chain_comparable(points[i], points[j])) return false;
    }
  }
  return true;
}

std::optional<GoodPair> as_good(const IsotropicSignature& v, const IsotropicSignature& w, const AdmissiblePair& p) {
  if (!leq(v, p.bottom) || leq(p.top, w)) return std::nullopt;
  IndexSet theta = ap_to_theta(p).theta;
  if (!leq(v, theta)) return std::nullopt;
  std::vector<GridPoint> points = mon_w(v, theta).support();
  if (!in_pos_c_chain(v, points)) return std::nullopt;
  return GoodPair{p, std::move(theta), as_chain(points)};
}

}  // namespace

std::vector<GoodPair> good_pairs(const IsotropicSignature& v, const IsotropicSignature& w) {
  if (!leq(v, w)) throw InputError("need v <= w, got v=" + v.str() + " w=" + w.str());
  std::vector<GoodPair> out;
  for (const AdmissiblePair& p : enumerate_admissible_pairs(v.d())) {
    if (auto good = as_good(v, w, p)) out.push_back(std::move(*good));
  }
  return out;
}

GoodPair chain_to_good_pair(const IsotropicSignature& v, const IsotropicSignature& w,
                            std::vector<GridPoint> chain) {
  const int d = v.d();
  for (GridPoint p : chain) {
    if (!in_pos_c(v, p)) throw InputError("chain_to_good_pair: " + to_string(p) + " is not in posC");
  }
  chain = as_chain(chain);
  if (dominates_chain(w, v, chain)) throw InputError("chain_to_good_pair: w dominates the chain");

  std::size_t s = 0;
  while (s < chain.size() && chain[s].r > d) ++s;

  std::vector<int> u(v.begin(), v.end());
  std::vector<int> t(v.begin(), v.end());
  std::vector<int> theta(v.begin(), v.end());
  auto drop = [](std::vector<int>& xs, int x) { xs.erase(std::remove(xs.begin(), xs.end(), x), xs.end()); };
  for (std::size_t i = 0; i < s; ++i) {
    drop(u, dual_index(chain[i].r, d));
    u.push_back(chain[i].r);
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    drop(t, chain[i].c);
    drop(theta, chain[i].c);
    theta.push_back(chain[i].r);
  }
  for (std::size_t i = s; i < chain.size(); ++i) drop(t, dual_index(chain[i].r, d));
  for (std::size_t i = 0; i < chain.size(); ++i) t.push_back(dual_index(chain[i].c, d));
  for (std::size_t i = s; i < chain.size(); ++i) t.push_back(chain[i].r);

  const IsotropicSignature top(IndexSet::from_unsorted(2 * d, t));
  const IsotropicSignature bottom(IndexSet::from_unsorted(2 * d, u));
  const auto pair = AdmissiblePair::make(top, bottom);
  ensure(pair.has_value(), "chain_to_good_pair: (t,u) is not admissible");
  const auto good = as_good(v, w, *pair);
  ensure(good.has_value(), "chain_to_good_pair: (t,u) is not good");
  ensure(good->theta == IndexSet::from_unsorted(2 * d, theta), "chain_to_good_pair: theta mismatch");
  ensure(good->mon_theta == chain, "chain_to_good_pair: mon_theta differs from the chain");
  return *good;
}

InitialTerm initial_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw InputError("initial_term: zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

std::vector<BigInt> count_avoiding_monomials(const VGrid& grid, const std::vector<GoodPair>& good, int max_degree) {
  const auto& roots = grid.roots();
  if (roots.size() > 64) throw InputError("count_avoiding_monomials: d <= 10 required");
  std::vector<std::uint64_t> forbidden;
  for (const GoodPair& g : good) {
    std::uint64_t mask = 0;
    for (GridPoint p : g.mon_theta) mask |= std::uint64_t{1} << *grid.roots_index(p);
    forbidden.push_back(mask);
  }
  std::vector<BigInt> by_size(roots.size() + 1);
  std::function<void(std::size_t, std::uint64_t, std::size_t)> extend = [&](std::size_t next, std::uint64_t set,
                                                                          std::size_t size) {
    by_size[size] += 1;
    for (std::size_t i = next; i < roots.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      const std::uint64_t grown = set | bit;
      const bool blocked = std::any_of(forbidden.begin(), forbidden.end(),
                                       [&](std::uint64_t f) { return (f & bit) && (f & grown) == f; });
      if (!blocked) extend(i + 1, grown, size + 1);
    }
  };
  extend(0, 0, 0);
  std::vector<BigInt> out;
  for (int m = 0; m <= max_degree; ++m) {
    if (m == 0) {
      out.push_back(1);
      continue;
    }
    BigInt total = 0;
    for (std::size_t i = 1; i < by_size.size(); ++i) total += by_size[i] * binomial(m - 1, static_cast<long>(i) - 1);
    out.push_back(total);
  }
  return out;
}

GrobnerReport certify_grobner(const IsotropicSignature& v, const IsotropicSignature& w, const TermOrder& order,
                              int max_degree) {
  if (max_degree < 0) throw InputError("certify_grobner: negative degree");
  const auto good = good_pairs(v, w);
  const PatchMatrix matrix(v);
  GrobnerReport report;
  report.order_index = order.index();
  report.scheme = order.scheme();
  report.good_pair_count = good.size();
  for (const GoodPair& g : good) {
    const Polynomial f = f_theta(matrix, g.theta);
    Monomial expected = square_free_monomial(g.mon_theta);
    const BigInt c = f.coefficient(expected);
    if (c != 1 && c != -1) report.unit_coefficients = false;
    InitialTerm found = initial_term(f, order);
    if (found.monomial != expected) report.violations.push_back({g, std::move(expected), std::move(found)});
  }
  report.avoiding_counts = count_avoiding_monomials(VGrid(v), good, max_degree);
  report.hilbert_values = DominatedComplex(v, w).hilbert_function(max_degree);
  report.counting_ok = report.avoiding_counts == report.hilbert_values;
  return report;
}

}  // namespace sympgrass
