#include "locascope/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "locascope/error.hpp"

namespace locascope {

void CountPolynomial::trim() {
  while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
}

CountPolynomial operator+(const CountPolynomial& a, const CountPolynomial& b) {
  CountPolynomial out;
  out.coefficients.assign(std::max(a.coefficients.size(), b.coefficients.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) out.coefficients[i] += a.coefficients[i];
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  out.trim();
  return out;
}

CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b) {
  CountPolynomial out;
  if (a.coefficients.empty() || b.coefficients.empty()) {
    out.coefficients.assign(1, BigInt(0));
    return out;
  }
  out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    if (a.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  }
  out.trim();
  return out;
}

CountPolynomial CountPolynomial::shifted(std::size_t k) const {
  CountPolynomial out;
  out.coefficients.assign(k, BigInt(0));
  out.coefficients.insert(out.coefficients.end(), coefficients.begin(), coefficients.end());
  out.trim();
  return out;
}

std::string CountPolynomial::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ", ";
    out += coefficients[i].str();
  }
  return out + "]";
}

double log_big(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  // Keep the top 64 bits; the dropped tail only perturbs the 19th digit.
  const std::size_t shift = bits - 64;
  std::uint64_t top = 0;
  for (std::size_t b = 0; b < 64; ++b) {
    if (boost::multiprecision::bit_test(value, shift + b)) top |= std::uint64_t{1} << b;
  }
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

double eval_log_partition(const CountPolynomial& p, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  const double log_lambda = std::log(lambda);
  std::vector<double> terms;
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
    if (p.coefficients[k] > 0) terms.push_back(log_big(p.coefficients[k]) + static_cast<double>(k) * log_lambda);
  }
  if (terms.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum);
}

}  // namespace locascope
