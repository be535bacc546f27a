#include "sympgrass/poset.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "sympgrass/errors.hpp"

namespace sympgrass {

namespace {

void require_same_shape(const IndexSet& u, const IndexSet& w, const char* op) {
  if (u.n() != w.n() || u.size() != w.size()) {
    throw InputError(std::string(op) + ": index sets " + u.str() + " (n=" +
                     std::to_string(u.n()) + ") and " + w.str() + " (n=" +
                     std::to_string(w.n()) + ") live in different I(d,n)");
  }
}

int half_of(const IndexSet& u, const char* op) {
  if (u.n() % 2 != 0 || u.size() * 2 != u.n()) {
    throw InputError(std::string(op) + ": " + u.str() + " is not in I(d,2d)");
  }
  return u.size();
}

}  // namespace

IndexSet::IndexSet(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ <= 0) throw InputError("index set: ambient size must be positive");
  if (entries_.empty() || static_cast<int>(entries_.size()) > n_) {
    throw InputError("index set: need 0 < d <= n");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > n_) {
      throw InputError("index set: entry " + std::to_string(entries_[i]) + " outside [1.." +
                       std::to_string(n_) + "]");
    }
    if (i > 0 && entries_[i - 1] >= entries_[i]) {
      throw InputError("index set: entries must be strictly increasing");
    }
  }
}

IndexSet IndexSet::from_unsorted(int n, std::vector<int> values) {
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw InputError("index set: repeated entry");
  }
  return IndexSet(n, std::move(values));
}

IndexSet IndexSet::parse(std::string_view text, int n) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("malformed index set \"" + std::string(text) +
                       "\": expected comma-separated integers");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return from_unsorted(n, std::move(values));
}

bool IndexSet::contains(int j) const noexcept {
  return std::binary_search(entries_.begin(), entries_.end(), j);
}

std::string IndexSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IndexSet& u) { return os << '(' << u.str() << ')'; }

bool is_isotropic(const IndexSet& u) {
  if (u.n() != 2 * u.size()) return false;
  const int d = u.size();
  for (int j = 1; j <= d; ++j) {
    if (u.contains(j) == u.contains(dual_index(j, d))) return false;
  }
  return true;
}

IsotropicSignature::IsotropicSignature(IndexSet u) : set_(std::move(u)) {
  if (!is_isotropic(set_)) {
    throw InputError("index set " + set_.str() + " is not in I(" + std::to_string(set_.size()) +
                     "): need exactly one of j, 2d+1-j for every j <= d");
  }
}

std::optional<IsotropicSignature> IsotropicSignature::try_from(const IndexSet& u) {
  if (!is_isotropic(u)) return std::nullopt;
  return IsotropicSignature(u);
}

IsotropicSignature IsotropicSignature::parse(std::string_view text, int d) {
  return IsotropicSignature(IndexSet::parse(text, 2 * d));
}

std::ostream& operator<<(std::ostream& os, const IsotropicSignature& u) { return os << u.set(); }

std::vector<IndexSet> enumerate_index_sets(int d, int n) {
  if (d < 1 || d > n) throw InputError("enumerate I(d,n): need 1 <= d <= n");
  std::vector<IndexSet> out;
  std::vector<int> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == n - d + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<IsotropicSignature> enumerate_isotropic(int d) {
  if (d < 1 || d > 30) throw InputError("enumerate I(d): need 1 <= d <= 30");
  std::vector<IsotropicSignature> out;
  out.reserve(std::size_t{1} << d);
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    std::vector<int> values;
    for (int j = 1; j <= d; ++j) {
      values.push_back((mask >> (j - 1)) & 1u ? dual_index(j, d) : j);
    }
    out.emplace_back(IndexSet::from_unsorted(2 * d, std::move(values)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IsotropicSignature epsilon(int d) {
  std::vector<int> values(d);
  for (int j = 0; j < d; ++j) values[j] = j + 1;
  return IsotropicSignature(IndexSet(2 * d, std::move(values)));
}

IsotropicSignature largest_isotropic(int d) {
  std::vector<int> values(d);
  for (int j = 0; j < d; ++j) values[j] = d + j + 1;
  return IsotropicSignature(IndexSet(2 * d, std::move(values)));
}

bool leq(const IndexSet& u, const IndexSet& w) {
  require_same_shape(u, w, "leq");
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] > w[i]) return false;
  }
  return true;
}

bool comparable(const IndexSet& u, const IndexSet& w) { return leq(u, w) || leq(w, u); }

IndexSet join(const IndexSet& u, const IndexSet& w) {
  require_same_shape(u, w, "join");
  std::vector<int> out(u.size());
  for (int i = 0; i < u.size(); ++i) out[i] = std::max(u[i], w[i]);
  return IndexSet(u.n(), std::move(out));
}

IndexSet meet(const IndexSet& u, const IndexSet& w) {
  require_same_shape(u, w, "meet");
  std::vector<int> out(u.size());
  for (int i = 0; i < u.size(); ++i) out[i] = std::min(u[i], w[i]);
  return IndexSet(u.n(), std::move(out));
}

IndexSet star(const IndexSet& u) {
  const int d = half_of(u, "star");
  std::vector<int> out(d);
  for (int i = 0; i < d; ++i) out[i] = dual_index(u[d - 1 - i], d);
  return IndexSet(u.n(), std::move(out));
}

IndexSet sharp(const IndexSet& u) {
  const int d = half_of(u, "sharp");
  std::vector<int> out;
  out.reserve(d);
  for (int j = 1; j <= 2 * d; ++j) {
    if (!u.contains(dual_index(j, d))) out.push_back(j);
  }
  return IndexSet(u.n(), std::move(out));
}

int eps_degree(const IndexSet& x) {
  const int d = half_of(x, "eps_degree");
  return static_cast<int>(std::count_if(x.begin(), x.end(), [d](int j) { return j > d; }));
}

int v_degree(const IndexSet& x, const IndexSet& v) {
  require_same_shape(x, v, "v_degree");
  return static_cast<int>(set_difference(x, v).size());
}

std::vector<int> set_difference(const IndexSet& u, const IndexSet& v) {
  std::vector<int> out;
  std::set_difference(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  return out;
}

}  // namespace sympgrass
