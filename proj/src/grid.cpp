#include "sympgrass/grid.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "sympgrass/errors.hpp"

namespace sympgrass {

std::string to_string(GridPoint p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.c) + ")";
}

std::ostream& operator<<(std::ostream& os, GridPoint p) { return os << to_string(p); }

std::string to_string(Ground g) { return g == Ground::RootsC ? "rootsC" : "posA"; }

bool in_pos_a(const IndexSet& v, GridPoint p) {
  return p.r >= 1 && p.r <= v.n() && p.c >= 1 && p.c <= v.n() && !v.contains(p.r) &&
         v.contains(p.c) && p.r > p.c;
}

bool in_roots_c(const IndexSet& v, GridPoint p) {
  if (v.n() != 2 * v.size()) return false;
  return p.r >= 1 && p.r <= v.n() && !v.contains(p.r) && v.contains(p.c) &&
         p.r <= dual_index(p.c, v.size());
}

bool in_pos_c(const IndexSet& v, GridPoint p) { return in_roots_c(v, p) && p.r > p.c; }

// ---------------------------------------------------------------------------

VGrid::VGrid(IsotropicSignature v) : v_(std::move(v)) {
  const int d = v_.d();
  for (int r = 1; r <= 2 * d; ++r) {
    if (v_.contains(r)) continue;
    for (int c : v_.set()) {
      const GridPoint p{r, c};
      if (r <= dual_index(c, d)) roots_.push_back(p);
      if (r > c) pos_a_.push_back(p);
      if (r > c && r <= dual_index(c, d)) pos_c_.push_back(p);
      if (on_diagonal(p, d)) diagonal_.push_back(p);
    }
  }
}

std::vector<GridPoint> VGrid::free_points() const {
  std::vector<GridPoint> out;
  for (GridPoint p : roots_) {
    if (p.r < p.c) out.push_back(p);
  }
  return out;
}

std::optional<std::size_t> VGrid::roots_index(GridPoint p) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), p);
  if (it == roots_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

std::optional<std::size_t> VGrid::pos_a_index(GridPoint p) const {
  auto it = std::lower_bound(pos_a_.begin(), pos_a_.end(), p);
  if (it == pos_a_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pos_a_.begin());
}

// ---------------------------------------------------------------------------

GridMonomial::GridMonomial(IndexSet v, Ground ground, std::vector<GridTerm> terms)
    : v_(std::move(v)), ground_(ground) {
  std::map<GridPoint, int> merged;
  for (const GridTerm& t : terms) {
    if (t.multiplicity < 1) throw InputError("monomial: multiplicities must be positive");
    const bool ok = ground_ == Ground::RootsC ? in_roots_c(v_, t.point) : in_pos_a(v_, t.point);
    if (!ok) {
      throw InputError("monomial: point " + to_string(t.point) + " is not in " +
                       to_string(ground_) + " of v=" + v_.str());
    }
    merged[t.point] += t.multiplicity;
  }
  terms_.reserve(merged.size());
  for (auto [p, m] : merged) terms_.push_back({p, m});
}

GridMonomial GridMonomial::square_free(IndexSet v, Ground ground, std::span<const GridPoint> points) {
  std::vector<GridPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw InputError("square-free monomial: repeated point");
  }
  std::vector<GridTerm> terms;
  for (GridPoint p : pts) terms.push_back({p, 1});
  return GridMonomial(std::move(v), ground, std::move(terms));
}

int GridMonomial::degree() const noexcept {
  int total = 0;
  for (const GridTerm& t : terms_) total += t.multiplicity;
  return total;
}

int GridMonomial::multiplicity(GridPoint p) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const GridTerm& t, GridPoint q) { return t.point < q; });
  return it != terms_.end() && it->point == p ? it->multiplicity : 0;
}

std::vector<GridPoint> GridMonomial::support() const {
  std::vector<GridPoint> out;
  out.reserve(terms_.size());
  for (const GridTerm& t : terms_) out.push_back(t.point);
  return out;
}

std::string GridMonomial::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ", ";
    out += to_string(terms_[i].point);
    if (terms_[i].multiplicity != 1) out += "^" + std::to_string(terms_[i].multiplicity);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const GridMonomial& m) { return os << m.str(); }

GridMonomial multiply(const GridMonomial& a, const GridMonomial& b) {
  if (a.base() != b.base() || a.ground() != b.ground()) {
    throw InputError("multiply: monomials over different grids");
  }
  std::vector<GridTerm> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return GridMonomial(a.base(), a.ground(), std::move(terms));
}

namespace {

template <typename F>
GridMonomial map_points(const GridMonomial& m, F f, const char* op) {
  if (m.ground() != Ground::PosA || !is_isotropic(m.base())) {
    throw InputError(std::string(op) + ": needs a posA monomial over v in I(d)");
  }
  std::vector<GridTerm> terms;
  for (const GridTerm& t : m.terms()) terms.push_back({f(t.point), t.multiplicity});
  return GridMonomial(m.base(), m.ground(), std::move(terms));
}

}  // namespace

GridMonomial mirror_monomial(const GridMonomial& m) {
  const int d = m.d();
  return map_points(m, [d](GridPoint p) { return mirror_point(p, d); }, "mirror");
}

GridMonomial up_monomial(const GridMonomial& m) {
  const int d = m.d();
  return map_points(m, [d](GridPoint p) { return up(p, d); }, "up");
}

bool is_special(const GridMonomial& m) {
  if (m != mirror_monomial(m)) return false;
  const int d = m.d();
  return std::all_of(m.terms().begin(), m.terms().end(), [d](const GridTerm& t) {
    return !on_diagonal(t.point, d) || t.multiplicity % 2 == 0;
  });
}

// ---------------------------------------------------------------------------

bool is_v_chain(std::span<const GridPoint> seq) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!chain_greater(seq[i - 1], seq[i])) return false;
  }
  return true;
}

std::vector<GridPoint> as_chain(std::span<const GridPoint> points) {
  std::vector<GridPoint> out(points.begin(), points.end());
  std::sort(out.begin(), out.end(), [](GridPoint a, GridPoint b) { return a.r > b.r; });
  if (!is_v_chain(out)) throw InputError("points do not form a v-chain");
  return out;
}

namespace {

// Tracks the index set (v \ {c_i}) ∪ {r_i} of a growing chain as a
// membership array and compares it against w via suffix counts:
// s <= w iff #{s_i >= k} <= #{w_i >= k} for every k.
class ChainState {
 public:
  ChainState(const IndexSet& w, const IndexSet& v) : n_(v.n()), member_(v.n() + 2, 0), w_suffix_(v.n() + 2, 0) {
    if (w.n() != v.n() || w.size() != v.size()) {
      throw InputError("domination: w=" + w.str() + " and v=" + v.str() + " differ in shape");
    }
    for (int j : v) member_[j] = 1;
    for (int k = n_; k >= 1; --k) w_suffix_[k] = w_suffix_[k + 1] + (w.contains(k) ? 1 : 0);
  }

  void push(GridPoint p) {
    member_[p.c] = 0;
    member_[p.r] = 1;
  }
  void pop(GridPoint p) {
    member_[p.r] = 0;
    member_[p.c] = 1;
  }

  bool dominated() const {
    int count = 0;
    for (int k = n_; k >= 1; --k) {
      count += member_[k];
      if (count > w_suffix_[k]) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<char> member_;
  std::vector<int> w_suffix_;
};

std::vector<GridPoint> chain_candidates(const IndexSet& v, std::span<const GridPoint> points) {
  std::vector<GridPoint> out;
  for (GridPoint p : points) {
    if (p.r <= p.c) continue;
    if (!in_pos_a(v, p)) throw InputError("domination: point " + to_string(p) + " is not a grid point of v=" + v.str());
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](GridPoint a, GridPoint b) {
    return a.r != b.r ? a.r > b.r : a.c < b.c;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Depth-first over all chains in `cand` (rows descending). Superchains only
// grow s_chain, so a failing chain ends the search. When `required` is set,
// only chains through cand[*required] are checked.
bool search_chains(const std::vector<GridPoint>& cand, ChainState& state,
                   std::optional<std::size_t> required, std::vector<GridPoint>& chain) {
  const bool has_required = !required || std::find(chain.begin(), chain.end(), cand[*required]) != chain.end();
  if (!chain.empty() && has_required && !state.dominated()) return false;
  const std::size_t start = [&] {
    if (chain.empty()) return std::size_t{0};
    auto it = std::find(cand.begin(), cand.end(), chain.back());
    return static_cast<std::size_t>(it - cand.begin()) + 1;
  }();
  for (std::size_t j = start; j < cand.size(); ++j) {
    if (required && !has_required && j > *required) break;
    if (!chain.empty() && !chain_greater(chain.back(), cand[j])) continue;
    chain.push_back(cand[j]);
    state.push(cand[j]);
    const bool ok = search_chains(cand, state, required, chain);
    if (!ok) return false;
    state.pop(cand[j]);
    chain.pop_back();
  }
  return true;
}

}  // namespace

IndexSet s_chain(const IndexSet& v, std::span<const GridPoint> chain) {
  const std::vector<GridPoint> ordered = as_chain(chain);
  std::vector<int> values(v.begin(), v.end());
  for (GridPoint p : ordered) {
    if (!in_pos_a(v, p)) {
      throw InputError("s_chain: point " + to_string(p) + " is not in posA of v=" + v.str());
    }
    std::replace(values.begin(), values.end(), p.c, p.r);
  }
  return IndexSet::from_unsorted(v.n(), std::move(values));
}

bool dominates_chain(const IndexSet& w, const IndexSet& v, std::span<const GridPoint> chain) {
  return leq(s_chain(v, chain), w);
}

std::optional<std::vector<GridPoint>> undominated_chain(const IndexSet& w, const IndexSet& v,
                                                        std::span<const GridPoint> points) {
  ChainState state(w, v);
  if (!state.dominated()) return std::vector<GridPoint>{};  // w does not even dominate v
  const auto cand = chain_candidates(v, points);
  std::vector<GridPoint> chain;
  if (search_chains(cand, state, std::nullopt, chain)) return std::nullopt;
  return chain;
}

std::optional<std::vector<GridPoint>> undominated_chain_through(const IndexSet& w, const IndexSet& v,
                                                                std::span<const GridPoint> points,
                                                                GridPoint through) {
  if (through.r <= through.c) return std::nullopt;
  std::vector<GridPoint> pool;
  for (GridPoint p : points) {
    if (p == through || chain_comparable(p, through)) pool.push_back(p);
  }
  pool.push_back(through);
  const auto cand = chain_candidates(v, pool);
  const auto required = static_cast<std::size_t>(std::find(cand.begin(), cand.end(), through) - cand.begin());
  ChainState state(w, v);
  std::vector<GridPoint> chain;
  if (search_chains(cand, state, required, chain)) return std::nullopt;
  return chain;
}

bool dominates_points(const IndexSet& w, const IndexSet& v, std::span<const GridPoint> points) {
  return !undominated_chain(w, v, points).has_value();
}

bool dominates_monomial(const IndexSet& w, const IndexSet& v, const GridMonomial& m) {
  if (m.base() != v) throw InputError("dominates_monomial: monomial lives over a different v");
  const auto support = m.support();
  return dominates_points(w, v, support);
}

IsotropicSignature dominator(const IsotropicSignature& v, std::span<const GridPoint> points) {
  std::optional<IndexSet> lower;
  for (const IsotropicSignature& x : enumerate_isotropic(v.d())) {
    if (!dominates_points(x, v, points)) continue;
    lower = lower ? meet(*lower, x.set()) : x.set();
  }
  ensure(lower.has_value(), "dominator: the largest element of I(d) must dominate everything");
  ensure(dominates_points(*lower, v, points), "dominator: meet of dominating elements does not dominate");
  return IsotropicSignature(*lower);
}

IsotropicSignature dominator(const IsotropicSignature& v, const GridMonomial& m) {
  const auto support = m.support();
  return dominator(v, support);
}

}  // namespace sympgrass
