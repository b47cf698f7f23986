#include "lucky/polynomial.hpp"

#include <utility>

namespace lucky {

LuckyPolynomial::LuckyPolynomial(std::vector<BigCount> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void LuckyPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigCount LuckyPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigCount(0);
}

BigCount LuckyPolynomial::evaluate(const BigCount& q) const {
  BigCount acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

LuckyPolynomial LuckyPolynomial::operator*(const LuckyPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
  std::vector<BigCount> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return LuckyPolynomial(std::move(out));
}

std::string to_string(const LuckyPolynomial& p) {
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += c[k] < 0 ? " - " : " + ";
    else if (c[k] < 0) out += "-";
    const BigCount mag = c[k] < 0 ? BigCount(-c[k]) : c[k];
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace lucky
