#pragma once

// Index sets I(d,n), the isotropic subset I(d) of I(d,2d), the componentwise
// order and the involutions * and #.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sympgrass {

/// j* = 2d + 1 - j.
constexpr int dual_index(int j, int d) noexcept { return 2 * d + 1 - j; }

/// An element of I(d,n): a strictly increasing sequence of d integers in [1..n].
class IndexSet {
 public:
  IndexSet() = default;

  /// Throws InputError unless the entries are strictly increasing in [1..n].
  IndexSet(int n, std::vector<int> entries);

  /// Parses "1,2,3,6,7" (whitespace tolerated). Entries may come unsorted;
  /// duplicates are rejected.
  static IndexSet parse(std::string_view text, int n);

  /// Builds from an unsorted collection of distinct values.
  static IndexSet from_unsorted(int n, std::vector<int> values);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const noexcept { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool contains(int j) const noexcept;

  /// "1,2,3,6,7"
  std::string str() const;

  // Lexicographic on (n, entries). Used for sorting and map keys; the
  // Bruhat-type order is leq().
  auto operator<=>(const IndexSet&) const = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IndexSet& u);

bool is_isotropic(const IndexSet& u);

/// An element of I(d): exactly one of j, j* for each j in [d].
class IsotropicSignature {
 public:
  /// Throws InputError when u is not isotropic.
  explicit IsotropicSignature(IndexSet u);

  static std::optional<IsotropicSignature> try_from(const IndexSet& u);
  static IsotropicSignature parse(std::string_view text, int d);

  int d() const noexcept { return set_.size(); }
  const IndexSet& set() const noexcept { return set_; }
  operator const IndexSet&() const noexcept { return set_; }  // NOLINT
  auto begin() const noexcept { return set_.begin(); }
  auto end() const noexcept { return set_.end(); }
  bool contains(int j) const noexcept { return set_.contains(j); }
  std::string str() const { return set_.str(); }

  auto operator<=>(const IsotropicSignature&) const = default;

 private:
  IndexSet set_;
};

std::ostream& operator<<(std::ostream& os, const IsotropicSignature& u);

/// All C(n,d) subsets, lexicographic.
std::vector<IndexSet> enumerate_index_sets(int d, int n);

/// The 2^d elements of I(d), lexicographic.
std::vector<IsotropicSignature> enumerate_isotropic(int d);

/// (1,...,d)
IsotropicSignature epsilon(int d);
/// (d+1,...,2d), the largest element of I(d).
IsotropicSignature largest_isotropic(int d);

/// Componentwise u_i <= w_i. Throws InputError on mismatched d or n.
bool leq(const IndexSet& u, const IndexSet& w);
bool comparable(const IndexSet& u, const IndexSet& w);

IndexSet join(const IndexSet& u, const IndexSet& w);
IndexSet meet(const IndexSet& u, const IndexSet& w);

/// Order-reversing involution {2d+1-u_i}. Requires n = 2d.
IndexSet star(const IndexSet& u);
/// Order-preserving involution [2d] \ u*. Fixes exactly I(d).
IndexSet sharp(const IndexSet& u);

/// |x \ [d]| with d = n/2.
int eps_degree(const IndexSet& x);
/// |x \ v|
int v_degree(const IndexSet& x, const IndexSet& v);

/// Elements of u outside of v, ascending.
std::vector<int> set_difference(const IndexSet& u, const IndexSet& v);

}  // namespace sympgrass
