#pragma once

#include <cstddef>
#include <utility>

#include "lucky/numeric.hpp"
#include "lucky/polynomial.hpp"

namespace lucky {

// H_n = sum_{i=1..n} 1/i, H_0 = 0.
ExactRational harmonic(std::size_t n);

// Expected pivot comparisons, closed form 2(n+1)H_n - 4n.
ExactRational q_expected_closed(std::size_t n);

// Expected pivot comparisons from the averaging recurrence over pivot ranks,
// Q_0 = 0. Memoized in a process-wide, mutex-guarded table.
ExactRational q_expected_recursive(std::size_t n);

// n! * Q_n. Throws ConsistencyError if the product is not an integer.
BigCount a_total(std::size_t n);

// A_n = (n+1) A_{n-1} + 2(n-1)(n-1)!, A_0 = 0.
BigCount a_stepwise(std::size_t n);

// f_n = 2n f_{n-1} - n(n-1) f_{n-2} + 2(n-1)!, f_0 = f_1 = 0.
BigCount recurrence_f(std::size_t n);

// Double-sum closed form for L_n. DomainError for n < 2.
BigCount l_closed_form(std::size_t n);

// Lists where the single unlucky car cannot park. DomainError for n < 2.
BigCount count_unable_to_park(std::size_t n);

// Lists where the single unlucky car parks elsewhere. DomainError for n < 2.
BigCount count_able_to_park(std::size_t n);

struct IdentitySides {
  BigCount lhs;
  BigCount rhs;
};

// lhs = sum_{l=0..i-1} l*C(n-l-1, i-l-1), rhs = C(n, i-2).
// DomainError unless 2 <= i <= n.
IdentitySides binomial_identity_check(std::size_t n, std::size_t i);

// q * prod_{i=1..n-1} (i + (n-i+1) q). The product stops at n-1: that is the
// form whose value at q = 1 is (n+1)^(n-1).
LuckyPolynomial gessel_seo_rhs(std::size_t n);

// Same product run to i = n. Kept only so callers can show that it does not
// match the parking-function count.
LuckyPolynomial gessel_seo_full_product(std::size_t n);

// (n+1)^(n-1).
BigCount pf_count(std::size_t n);

}  // namespace lucky
