#include "lucky/numeric.hpp"

#include <mutex>
#include <vector>

namespace lucky {

namespace {

class FactorialCache {
 public:
  BigCount get(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (table_.size() <= n) {
      table_.push_back(table_.back() * table_.size());
    }
    return table_[n];
  }

 private:
  std::mutex mu_;
  std::vector<BigCount> table_{BigCount(1)};
};

// Pascal's triangle, grown row by row on demand.
class BinomialCache {
 public:
  BigCount get(std::size_t n, std::size_t k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      std::vector<BigCount> row(prev.size() + 1, BigCount(1));
      for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<BigCount>> rows_{{BigCount(1)}};
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

}  // namespace

std::string to_string(const ExactRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_string(const BigCount& v) { return v.str(); }

BigCount factorial(std::size_t n) { return factorial_cache().get(n); }

BigCount falling_ratio(std::size_t n, std::size_t m) {
  BigCount out = 1;
  for (std::size_t k = m + 1; k <= n; ++k) out *= k;
  return out;
}

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  static BinomialCache cache;
  return cache.get(n, k);
}

}  // namespace lucky
