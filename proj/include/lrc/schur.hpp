#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrc/partition.hpp"

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in n variables: exponent vector -> coefficient. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int n_vars = 0) : n_vars_(n_vars) {}

  int n_vars() const { return n_vars_; }
  const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const std::vector<int>& exponents) const;

  void add_term(const std::vector<int>& exponents, const BigInt& c);
  Polynomial& add_scaled(const Polynomial& other, const BigInt& c);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Total number of monomials counted with multiplicity.
  BigInt coefficient_sum() const;
  std::string to_string() const;

 private:
  int n_vars_;
  std::map<std::vector<int>, BigInt> terms_;
};

/// lambda -> c^lambda_{mu nu}, zero terms omitted.
using SchurExpansion = std::map<Partition, BigInt>;

/// s_lambda(x_1..x_n) as the generating function of SSYT over [n].
Polynomial schur_polynomial(const Partition& lambda, int n_vars);

/// Number of ballot tableaux of shape lambda/mu and content nu.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_mu s_nu restricted to lambda with at most max_rows rows.
SchurExpansion schur_product(const Partition& mu, const Partition& nu, int max_rows);

std::string to_string(const SchurExpansion& e);

}  // namespace lrc
