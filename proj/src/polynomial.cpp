#include "sympgrass/polynomial.hpp"

#include <algorithm>

#include "sympgrass/errors.hpp"

namespace sympgrass {

int degree(const Monomial& m) {
  int total = 0;
  for (const auto& [p, e] : m) total += e;
  return total;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial square_free_monomial(std::vector<GridPoint> points) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw InputError("square_free_monomial: repeated point");
  }
  Monomial out;
  for (GridPoint p : points) out.emplace_back(p, 1);
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : m) {
    if (!out.empty()) out += "·";
    out += "X" + to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial Polynomial::variable(GridPoint p, BigInt coefficient) { return term({{p, 1}}, std::move(coefficient)); }

Polynomial Polynomial::term(Monomial m, BigInt coefficient) {
  Polynomial out;
  out.add_term(m, coefficient);
  return out;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::degree() const {
  int top = -1;
  for (const auto& [m, c] : terms_) top = std::max(top, sympgrass::degree(m));
  return top;
}

bool Polynomial::is_homogeneous() const {
  const int top = degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return sympgrass::degree(t.first) == top; });
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += c < 0 ? "-" : "+";
    out += to_decimal(c < 0 ? BigInt(-c) : c);
    if (!m.empty()) out += "·" + to_string(m);
  }
  return out;
}

}  // namespace sympgrass
