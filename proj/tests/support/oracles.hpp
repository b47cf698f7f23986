#pragma once

// Test-only reference implementations. Nothing here calls into lucky_core;
// each oracle recomputes its quantity from first principles with plain
// 64/128-bit integers so it can stand against the library's code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace lucky::testing {

using u128 = unsigned __int128;

struct ParkOracleResult {
  int lucky = 0;
  bool all_parked = true;
};

// Parks by scanning a list of taken spots (no occupancy array).
inline ParkOracleResult park_oracle(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<int> taken;
  ParkOracleResult r;
  for (int p : prefs) {
    int s = p;
    while (s <= n && std::find(taken.begin(), taken.end(), s) != taken.end()) ++s;
    if (s > n) {
      r.all_parked = false;
      continue;
    }
    taken.push_back(s);
    if (s == p) ++r.lucky;
  }
  return r;
}

// Visits every list in [n]^n (recursive, lexicographic).
template <typename Fn>
void for_each_list(int n, Fn&& fn) {
  std::vector<int> prefs(n, 1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      fn(prefs);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      prefs[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

// Quicksort (rightmost pivot) comparison count via the pair criterion: keys
// a < b are compared iff, among all keys with value in [a, b], the one
// placed furthest right in the input is a or b.
inline std::uint64_t pair_criterion_comparisons(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  std::uint64_t total = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      int latest = a;
      for (int v = a; v <= b; ++v) {
        if (pos[v] > pos[latest]) latest = v;
      }
      if (latest == a || latest == b) ++total;
    }
  }
  return total;
}

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Total comparisons over all n! orderings via the pair criterion.
inline std::uint64_t brute_total_comparisons(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t total = 0;
  do {
    total += pair_criterion_comparisons(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Small exact rational over 128-bit integers (enough for n <= 20).
struct SmallRational {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  SmallRational normalized() const {
    const __int128 g = gcd(num, den);
    return g == 0 ? SmallRational{0, 1} : SmallRational{num / g, den / g};
  }
  friend SmallRational operator+(SmallRational a, SmallRational b) {
    return SmallRational{a.num * b.den + b.num * a.den, a.den * b.den}.normalized();
  }
};

// H_n summed term by term.
inline SmallRational harmonic_oracle(int n) {
  SmallRational h;
  for (int i = 1; i <= n; ++i) h = h + SmallRational{1, i};
  return h;
}

// f_n by the second-order recurrence in signed 128-bit arithmetic.
inline std::vector<__int128> recurrence_oracle(int max_n) {
  std::vector<__int128> f(std::max(2, max_n + 1), 0);
  __int128 fact = 1;  // (m-1)!
  for (int m = 2; m <= max_n; ++m) {
    fact *= (m - 1);
    f[m] = 2 * m * f[m - 1] - static_cast<__int128>(m) * (m - 1) * f[m - 2] + 2 * fact;
  }
  return f;
}

}  // namespace lucky::testing
