#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace locascope {

using BigInt = boost::multiprecision::cpp_int;

/// Generating polynomial of configurations by size: coefficients[k] counts
/// the independent sets (or matchings) with k elements.
struct CountPolynomial {
  std::vector<BigInt> coefficients{BigInt(1)};

  std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  void trim();

  friend CountPolynomial operator+(const CountPolynomial& a, const CountPolynomial& b);
  friend CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b);
  /// Multiplication by lambda^k.
  CountPolynomial shifted(std::size_t k) const;

  friend bool operator==(const CountPolynomial&, const CountPolynomial&) = default;

  std::string to_string() const;
};

/// Natural log of a positive big integer, exact to double precision even
/// when the value exceeds the double range.
double log_big(const BigInt& value);

/// log(sum_k c_k lambda^k), evaluated as a log-sum-exp over the nonzero
/// terms. Throws Error{InvalidArgument} unless lambda > 0.
double eval_log_partition(const CountPolynomial& p, double lambda);

}  // namespace locascope
