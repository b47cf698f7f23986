#include "lucky/sequences.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "lucky/errors.hpp"

namespace lucky {

namespace {

void require_at_least_two(std::size_t n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + " requires n >= 2, got " + std::to_string(n));
}

void require_positive(std::size_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " requires n >= 1");
}

class RecursiveExpectation {
 public:
  ExactRational get(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t m = q_.size(); m <= n; ++m) {
      ExactRational pivot_sum = 0;
      for (std::size_t k = 1; k <= m; ++k) pivot_sum += q_[k - 1] + q_[m - k];
      q_.push_back(ExactRational(m - 1) + pivot_sum / m);
    }
    return q_[n];
  }

 private:
  std::mutex mu_;
  std::vector<ExactRational> q_{ExactRational(0)};
};

// Builds the Gessel-Seo product q * prod_{i=1..upper} (i + (n-i+1) q).
LuckyPolynomial gessel_seo_product(std::size_t n, std::size_t upper) {
  LuckyPolynomial out({BigCount(0), BigCount(1)});
  for (std::size_t i = 1; i <= upper; ++i) {
    out = out * LuckyPolynomial({BigCount(i), BigCount(n - i + 1)});
  }
  return out;
}

}  // namespace

ExactRational harmonic(std::size_t n) {
  ExactRational h = 0;
  for (std::size_t i = 1; i <= n; ++i) h += ExactRational(1, i);
  return h;
}

ExactRational q_expected_closed(std::size_t n) {
  return 2 * ExactRational(n + 1) * harmonic(n) - 4 * ExactRational(n);
}

ExactRational q_expected_recursive(std::size_t n) {
  static RecursiveExpectation cache;
  return cache.get(n);
}

BigCount a_total(std::size_t n) {
  const ExactRational product = ExactRational(factorial(n)) * q_expected_closed(n);
  if (boost::multiprecision::denominator(product) != 1) {
    throw ConsistencyError("n! * Q_n is not an integer at n=" + std::to_string(n) + ": " +
                           to_string(product));
  }
  return boost::multiprecision::numerator(product);
}

BigCount a_stepwise(std::size_t n) {
  BigCount a = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    a = (m + 1) * a + 2 * BigCount(m - 1) * factorial(m - 1);
  }
  return a;
}

BigCount recurrence_f(std::size_t n) {
  if (n < 2) return 0;
  BigCount prev2 = 0;  // f_{m-2}
  BigCount prev1 = 0;  // f_{m-1}
  for (std::size_t m = 2; m <= n; ++m) {
    BigCount next = 2 * BigCount(m) * prev1 - BigCount(m) * (m - 1) * prev2 + 2 * factorial(m - 1);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

BigCount l_closed_form(std::size_t n) {
  require_at_least_two(n, "l_closed_form");
  BigCount sum = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t l = 0; l <= i - 1; ++l) {
      const BigCount numerator = factorial(i - 1) * factorial(n - l - 1);
      const BigCount denominator = factorial(i - 1 - l);
      BigCount quotient;
      BigCount remainder;
      boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
      if (remainder != 0) {
        throw ConsistencyError("non-integral summand in L_n at n=" + std::to_string(n) +
                               ", i=" + std::to_string(i) + ", l=" + std::to_string(l));
      }
      sum += BigCount(l) * (n - i + 1) * quotient;
    }
  }
  return 2 * sum;
}

BigCount count_unable_to_park(std::size_t n) {
  require_at_least_two(n, "count_unable_to_park");
  BigCount sum = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t l = 1; l <= i - 1; ++l) {
      sum += BigCount(l) * binomial(i - 1, l) * factorial(l) *
             binomial(n - l - 1, i - 1 - l) * factorial(i - 1 - l) *
             binomial(n - i + 1, n - i) * factorial(n - i);
    }
  }
  return sum;
}

BigCount count_able_to_park(std::size_t n) {
  require_at_least_two(n, "count_able_to_park");
  BigCount sum = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t l = 0; l <= i - 1; ++l) {
      sum += BigCount(i - 1 - l) * binomial(i - 1, l) * factorial(l) *
             binomial(n - l - 1, i - 1 - l) * factorial(i - 1 - l) * factorial(n - i);
    }
  }
  return sum;
}

IdentitySides binomial_identity_check(std::size_t n, std::size_t i) {
  if (i < 2 || i > n) {
    throw DomainError("binomial identity needs 2 <= i <= n, got n=" + std::to_string(n) +
                      ", i=" + std::to_string(i));
  }
  IdentitySides out;
  for (std::size_t l = 0; l <= i - 1; ++l) out.lhs += BigCount(l) * binomial(n - l - 1, i - l - 1);
  out.rhs = binomial(n, i - 2);
  return out;
}

LuckyPolynomial gessel_seo_rhs(std::size_t n) {
  require_positive(n, "gessel_seo_rhs");
  return gessel_seo_product(n, n - 1);
}

LuckyPolynomial gessel_seo_full_product(std::size_t n) {
  require_positive(n, "gessel_seo_full_product");
  return gessel_seo_product(n, n);
}

BigCount pf_count(std::size_t n) {
  require_positive(n, "pf_count");
  return boost::multiprecision::pow(BigCount(n + 1), static_cast<unsigned>(n - 1));
}

}  // namespace lucky
