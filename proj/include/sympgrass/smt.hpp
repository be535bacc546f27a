#pragma once

// Admissible pairs, standard tableaux and the tableau side of the Hilbert
// function: |SM^v_w(m)|, the number of w-dominated v-compatible standard
// tableaux of total v-degree m.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympgrass/bigint.hpp"
#include "sympgrass/poset.hpp"

namespace sympgrass {

/// (top, bottom) in I(d)^2 with top >= bottom and equal eps-degrees.
struct AdmissiblePair {
  IsotropicSignature top;
  IsotropicSignature bottom;

  static std::optional<AdmissiblePair> make(const IsotropicSignature& top, const IsotropicSignature& bottom);

  std::string str() const;
  auto operator<=>(const AdmissiblePair&) const = default;
};

bool is_admissible(const IsotropicSignature& top, const IsotropicSignature& bottom);

/// All admissible pairs of I(d), ordered by (top, bottom).
std::vector<AdmissiblePair> enumerate_admissible_pairs(int d);

struct ThetaPair {
  IndexSet theta;
  IndexSet tau;
};

/// theta = (x ∩ [d]) ∪ (y ∩ [d]^c), tau = (y ∩ [d]) ∪ (x ∩ [d]^c).
ThetaPair ap_to_theta(const AdmissiblePair& pair);

/// The two side conditions on theta: |theta ∩ [d]| = |theta# ∩ [d]| and
/// theta ∩ [d] >= theta# ∩ [d] componentwise.
bool satisfies_theta_conditions(const IndexSet& theta);

struct ThetaRecovery {
  IndexSet x;  // (theta ∩ [d]) ∪ (tau ∩ [d]^c)
  IndexSet y;  // (tau ∩ [d]) ∪ (theta ∩ [d]^c)
  std::optional<AdmissiblePair> pair;
  std::string reason;  // why x, y fail to be admissible

  bool admissible() const noexcept { return pair.has_value(); }
};

/// Inverse of ap_to_theta. Throws InputError unless tau = theta#.
ThetaRecovery theta_to_ap(const IndexSet& theta, const IndexSet& tau);

/// (|x \ v| + |y \ v|) / 2, cross-checked against |theta \ v|.
int v_degree_ap(const AdmissiblePair& pair, const IsotropicSignature& v);

/// pi >= pi' when bottom(pi) >= top(pi').
bool pair_geq(const AdmissiblePair& a, const AdmissiblePair& b);

/// Comparable to v and distinct from (v, v).
bool is_v_compatible(const AdmissiblePair& pair, const IsotropicSignature& v);

/// (bottom*, top*)
AdmissiblePair dual_pair(const AdmissiblePair& pair);

class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws InputError unless pairs[i] >= pairs[i+1].
  explicit StandardTableau(std::vector<AdmissiblePair> pairs);

  std::span<const AdmissiblePair> pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }

  bool operator==(const StandardTableau&) const = default;

 private:
  std::vector<AdmissiblePair> pairs_;
};

bool is_v_compatible(const StandardTableau& t, const IsotropicSignature& v);
/// w >= top of the first pair.
bool is_w_dominated(const StandardTableau& t, const IsotropicSignature& w);
/// bottom of the last pair >= v.
bool is_anti_dominated(const StandardTableau& t, const IsotropicSignature& v);
int v_degree(const StandardTableau& t, const IsotropicSignature& v);

/// (pi_t*, ..., pi_1*)
StandardTableau dual_tableau(const StandardTableau& t);

/// |SM^v_w(m)| for m = 0..max_degree. Requires v <= w.
std::vector<BigInt> count_sm(const IsotropicSignature& v, const IsotropicSignature& w, int max_degree);
BigInt count_sm_at(const IsotropicSignature& v, const IsotropicSignature& w, int m);

/// The tableaux themselves, degree exactly m. Exponential in m.
std::vector<StandardTableau> enumerate_sm(const IsotropicSignature& v, const IsotropicSignature& w, int m);

}  // namespace sympgrass
