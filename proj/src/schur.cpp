#include "lrc/schur.hpp"

#include <sstream>

#include "lrc/enumerate.hpp"

namespace lrc {

BigInt Polynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const std::vector<int>& exponents, const BigInt& c) {
  if (static_cast<int>(exponents.size()) != n_vars_) throw Error("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, const BigInt& c) {
  if (other.n_vars_ != n_vars_) throw Error("polynomials in different numbers of variables");
  for (const auto& [e, a] : other.terms_) add_term(e, a * c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_vars_ != b.n_vars_) throw Error("polynomials in different numbers of variables");
  Polynomial out(a.n_vars_);
  std::vector<int> e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.n_vars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

BigInt Polynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    out << (first ? "" : " + ");
    first = false;
    bool constant = true;
    std::ostringstream mono;
    for (int k = 0; k < n_vars_; ++k) {
      if (e[k] == 0) continue;
      mono << (constant ? "" : "*") << "x" << k + 1;
      if (e[k] > 1) mono << "^" << e[k];
      constant = false;
    }
    if (constant) out << c;
    else if (c == 1) out << mono.str();
    else out << c << "*" << mono.str();
  }
  return out.str();
}

Polynomial schur_polynomial(const Partition& lambda, int n_vars) {
  if (n_vars < 1) throw Error("a Schur polynomial needs at least one variable");
  Polynomial p(n_vars);
  std::vector<int> e(n_vars);
  for_each_ssyt(SkewShape(lambda, Partition()), n_vars, [&](const SkewTableau& t) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& r : t.rows())
      for (int x : r) ++e[x - 1];
    p.add_term(e, 1);
  });
  return p;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) return 0;
  return enumerate_ballot(SkewShape(lambda, mu), nu).size();
}

SchurExpansion schur_product(const Partition& mu, const Partition& nu, int max_rows) {
  if (max_rows < std::max(mu.length(), nu.length()))
    throw Error("max_rows must be at least the length of both factors");
  SchurExpansion out;
  const int n = mu.size() + nu.size();
  for (const Partition& lambda : partitions_of(n, max_rows, mu[1] + nu[1])) {
    if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
    BigInt c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(lambda, c);
  }
  return out;
}

std::string to_string(const SchurExpansion& e) {
  if (e.empty()) return "0";
  std::string out;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += it->second.str() + "*";
    out += "s" + it->first.trimmed().to_string();
  }
  return out;
}

}  // namespace lrc
