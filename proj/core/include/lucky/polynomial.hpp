#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lucky/numeric.hpp"

namespace lucky {

// Polynomial in q with big-integer coefficients; coefficients()[k] is the
// coefficient of q^k. Trailing zero coefficients are trimmed so equality is
// structural.
class LuckyPolynomial {
 public:
  LuckyPolynomial() = default;
  explicit LuckyPolynomial(std::vector<BigCount> coefficients);

  const std::vector<BigCount>& coefficients() const { return coeffs_; }
  BigCount coefficient(std::size_t k) const;
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  BigCount evaluate(const BigCount& q) const;

  LuckyPolynomial operator*(const LuckyPolynomial& rhs) const;

  friend bool operator==(const LuckyPolynomial&, const LuckyPolynomial&) = default;

 private:
  void trim();

  std::vector<BigCount> coeffs_;
};

// "q + 2q^2", "0" for the zero polynomial.
std::string to_string(const LuckyPolynomial& p);

}  // namespace lucky
