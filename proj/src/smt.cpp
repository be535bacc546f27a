#include "sympgrass/smt.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sympgrass/errors.hpp"

namespace sympgrass {

namespace {

std::vector<int> small_part(const IndexSet& u, int d) {
  std::vector<int> out;
  for (int j : u) {
    if (j <= d) out.push_back(j);
  }
  return out;
}

std::vector<int> large_part(const IndexSet& u, int d) {
  std::vector<int> out;
  for (int j : u) {
    if (j > d) out.push_back(j);
  }
  return out;
}

IndexSet glue(int n, std::vector<int> low, const std::vector<int>& high) {
  low.insert(low.end(), high.begin(), high.end());
  return IndexSet::from_unsorted(n, std::move(low));
}

void require_below(const IsotropicSignature& v, const IsotropicSignature& w) {
  if (!leq(v, w)) throw InputError("need v <= w, got v=" + v.str() + " w=" + w.str());
}

// v-compatible pairs sorted by top, with their v-degrees; the tableau
// recursion filters them by the running upper bound.
class CompatiblePairs {
 public:
  explicit CompatiblePairs(const IsotropicSignature& v) {
    for (const AdmissiblePair& p : enumerate_admissible_pairs(v.d())) {
      if (!is_v_compatible(p, v)) continue;
      const int deg = v_degree_ap(p, v);
      ensure(deg >= 1, "v-compatible pair of v-degree 0: " + p.str());
      entries_.push_back({p, deg});
    }
  }

  struct Entry {
    AdmissiblePair pair;
    int degree;
  };

  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace

std::optional<AdmissiblePair> AdmissiblePair::make(const IsotropicSignature& top,
                                                   const IsotropicSignature& bottom) {
  if (!is_admissible(top, bottom)) return std::nullopt;
  return AdmissiblePair{top, bottom};
}

std::string AdmissiblePair::str() const { return "[" + top.str() + " | " + bottom.str() + "]"; }

bool is_admissible(const IsotropicSignature& top, const IsotropicSignature& bottom) {
  return top.d() == bottom.d() && leq(bottom, top) && eps_degree(top) == eps_degree(bottom);
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(int d) {
  const auto elements = enumerate_isotropic(d);
  std::vector<AdmissiblePair> out;
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      if (is_admissible(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

ThetaPair ap_to_theta(const AdmissiblePair& pair) {
  const int d = pair.top.d();
  const int n = 2 * d;
  ThetaPair out{glue(n, small_part(pair.top, d), large_part(pair.bottom, d)),
                glue(n, small_part(pair.bottom, d), large_part(pair.top, d))};
  ensure(out.tau == sharp(out.theta), "ap_to_theta: tau != theta# for " + pair.str());
  return out;
}

bool satisfies_theta_conditions(const IndexSet& theta) {
  const int d = theta.n() / 2;
  const auto a = small_part(theta, d);
  const auto b = small_part(sharp(theta), d);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

ThetaRecovery theta_to_ap(const IndexSet& theta, const IndexSet& tau) {
  if (tau != sharp(theta)) {
    throw InputError("theta_to_ap: tau=" + tau.str() + " is not theta#=" + sharp(theta).str());
  }
  const int d = theta.n() / 2;
  const int n = theta.n();
  ThetaRecovery out{glue(n, small_part(theta, d), large_part(tau, d)),
                    glue(n, small_part(tau, d), large_part(theta, d)), std::nullopt, {}};
  const auto x = IsotropicSignature::try_from(out.x);
  const auto y = IsotropicSignature::try_from(out.y);
  if (!x || !y) {
    out.reason = "recovered sets are not both in I(d)";
  } else if (eps_degree(*x) != eps_degree(*y)) {
    out.reason = "recovered sets have different eps-degrees";
  } else if (!leq(*y, *x)) {
    out.reason = "recovered sets " + out.x.str() + " and " + out.y.str() + " are not comparable as top >= bottom";
  } else {
    out.pair = AdmissiblePair{*x, *y};
  }
  ensure(out.admissible() == satisfies_theta_conditions(theta),
         "theta_to_ap: admissibility disagrees with the theta conditions for " + theta.str());
  return out;
}

int v_degree_ap(const AdmissiblePair& pair, const IsotropicSignature& v) {
  const int twice = v_degree(pair.top, v) + v_degree(pair.bottom, v);
  ensure(twice % 2 == 0, "v-degree of " + pair.str() + " is not integral");
  const int deg = twice / 2;
  ensure(deg == v_degree(ap_to_theta(pair).theta, v), "v-degree half-sum disagrees with |theta \\ v|");
  return deg;
}

bool pair_geq(const AdmissiblePair& a, const AdmissiblePair& b) { return leq(b.top, a.bottom); }

bool is_v_compatible(const AdmissiblePair& pair, const IsotropicSignature& v) {
  if (pair.top == v && pair.bottom == v) return false;
  return leq(pair.top, v) || leq(v, pair.bottom);
}

AdmissiblePair dual_pair(const AdmissiblePair& pair) {
  return {IsotropicSignature(star(pair.bottom)), IsotropicSignature(star(pair.top))};
}

StandardTableau::StandardTableau(std::vector<AdmissiblePair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (!pair_geq(pairs_[i - 1], pairs_[i])) throw InputError("standard tableau: pairs must be weakly decreasing");
  }
}

bool is_v_compatible(const StandardTableau& t, const IsotropicSignature& v) {
  return std::all_of(t.pairs().begin(), t.pairs().end(),
                     [&](const AdmissiblePair& p) { return is_v_compatible(p, v); });
}

bool is_w_dominated(const StandardTableau& t, const IsotropicSignature& w) {
  return t.empty() || leq(t.pairs().front().top, w);
}

bool is_anti_dominated(const StandardTableau& t, const IsotropicSignature& v) {
  return t.empty() || leq(v, t.pairs().back().bottom);
}

int v_degree(const StandardTableau& t, const IsotropicSignature& v) {
  int total = 0;
  for (const auto& p : t.pairs()) total += v_degree_ap(p, v);
  return total;
}

StandardTableau dual_tableau(const StandardTableau& t) {
  std::vector<AdmissiblePair> out;
  for (auto it = t.pairs().rbegin(); it != t.pairs().rend(); ++it) out.push_back(dual_pair(*it));
  return StandardTableau(std::move(out));
}

std::vector<BigInt> count_sm(const IsotropicSignature& v, const IsotropicSignature& w, int max_degree) {
  require_below(v, w);
  if (max_degree < 0) throw InputError("count_sm: negative degree");
  const CompatiblePairs pairs(v);
  std::map<std::pair<IsotropicSignature, int>, BigInt> memo;
  // Tableaux with first top <= bound and total degree exactly rem.
  std::function<BigInt(const IsotropicSignature&, int)> count = [&](const IsotropicSignature& bound, int rem) {
    if (rem == 0) return BigInt(1);
    auto key = std::make_pair(bound, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& e : pairs.entries()) {
      if (e.degree <= rem && leq(e.pair.top, bound)) total += count(e.pair.bottom, rem - e.degree);
    }
    memo.emplace(key, total);
    return total;
  };
  std::vector<BigInt> out;
  for (int m = 0; m <= max_degree; ++m) out.push_back(count(w, m));
  return out;
}

BigInt count_sm_at(const IsotropicSignature& v, const IsotropicSignature& w, int m) {
  return count_sm(v, w, m).back();
}

std::vector<StandardTableau> enumerate_sm(const IsotropicSignature& v, const IsotropicSignature& w, int m) {
  require_below(v, w);
  const CompatiblePairs pairs(v);
  std::vector<StandardTableau> out;
  std::vector<AdmissiblePair> current;
  std::function<void(const IsotropicSignature&, int)> walk = [&](const IsotropicSignature& bound, int rem) {
    if (rem == 0) {
      out.emplace_back(current);
      return;
    }
    for (const auto& e : pairs.entries()) {
      if (e.degree > rem || !leq(e.pair.top, bound)) continue;
      current.push_back(e.pair);
      walk(e.pair.bottom, rem - e.degree);
      current.pop_back();
    }
  };
  walk(w, m);
  return out;
}

}  // namespace sympgrass
