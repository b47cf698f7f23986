#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "lucky/numeric.hpp"
#include "lucky/parking.hpp"
#include "lucky/polynomial.hpp"

namespace lucky {

struct EnumerationOptions {
  // Largest accepted n. 9^9 = 387,420,489 lists.
  std::size_t max_n = 9;
  // Worker threads for tallying; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Hard ceiling for max_n: n^n must fit in a 64-bit rank.
inline constexpr std::size_t kEnumerationHardLimit = 15;

// Throws RangeError unless 1 <= n <= options.max_n (and the hard limit).
void check_enumeration_size(std::size_t n, const EnumerationOptions& options = {});

// n^n as a 64-bit rank bound.
std::uint64_t list_count(std::size_t n);

// Mixed-radix odometer over [n]^n in lexicographic order, restricted to the
// rank interval [first, last). Rank r corresponds to the base-n digits of r
// (most significant first), each shifted by +1.
class ListRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<std::uint8_t>;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;

    iterator() = default;

    reference operator*() const { return digits_; }
    pointer operator->() const { return &digits_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    std::uint64_t rank() const { return rank_; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.rank_ == b.rank_;
    }

   private:
    friend class ListRange;
    iterator(std::size_t n, std::uint64_t rank);

    std::vector<std::uint8_t> digits_;
    std::uint64_t rank_ = 0;
  };

  // Whole space [n]^n.
  explicit ListRange(std::size_t n, const EnumerationOptions& options = {});
  // Sub-range by rank; throws RangeError if first > last or last > n^n.
  ListRange(std::size_t n, std::uint64_t first, std::uint64_t last,
            const EnumerationOptions& options = {});

  iterator begin() const { return iterator(n_, first_); }
  iterator end() const;

  std::size_t n() const { return n_; }
  std::uint64_t first() const { return first_; }
  std::uint64_t last() const { return last_; }
  std::uint64_t size() const { return last_ - first_; }

  // Splits into `parts` disjoint contiguous sub-ranges covering this one.
  std::vector<ListRange> split(std::size_t parts) const;

 private:
  std::size_t n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// Preferences (1-based) of the list with the given lexicographic rank.
std::vector<std::uint8_t> unrank_list(std::size_t n, std::uint64_t rank);

// Everything measured in a single pass over a set of preference lists.
// Partial tallies over disjoint ranges merge by addition.
struct EnumerationTally {
  std::size_t n = 0;
  // by_lucky[k] / pf_by_lucky[k], k = 0..n.
  std::vector<std::uint64_t> by_lucky;
  std::vector<std::uint64_t> pf_by_lucky;
  // Lists with Lucky = n-1 where car 1 shares its preference (M_n).
  std::uint64_t near_lucky_car1_competing = 0;
  // Lists with Lucky = n-1 whose preferences are not "one value twice, the
  // rest once". Must stay zero.
  std::uint64_t near_lucky_malformed = 0;

  explicit EnumerationTally(std::size_t size = 0);
  EnumerationTally& operator+=(const EnumerationTally& other);
  friend bool operator==(const EnumerationTally&, const EnumerationTally&) = default;
};

EnumerationTally tally_range(const ListRange& range);

// Tallies all of [n]^n, splitting the rank space across worker threads.
EnumerationTally tally_all(std::size_t n, const EnumerationOptions& options = {});

struct LuckyDistribution {
  std::size_t n = 0;
  std::vector<BigCount> all_lists;
  std::vector<BigCount> pf_only;
};

struct CompetingSplit {
  std::size_t n = 0;
  BigCount n_count;  // car 1 not in the competing pair
  BigCount m_count;  // car 1 in the competing pair
};

struct PfSplit {
  BigCount pf_part;
  BigCount non_pf_part;
};

LuckyDistribution lucky_distribution(std::size_t n, const EnumerationOptions& options = {});

// Brute-force L_n. Throws DomainError for n < 2.
BigCount count_lucky_n_minus_1(std::size_t n, const EnumerationOptions& options = {});

LuckyPolynomial pf_lucky_polynomial(std::size_t n, const EnumerationOptions& options = {});

PfSplit split_by_pf(std::size_t n, const EnumerationOptions& options = {});

// Throws ConsistencyError if some list with n-1 lucky cars does not have
// exactly one duplicated preference.
CompetingSplit competing_car_split(std::size_t n, const EnumerationOptions& options = {});

// Views of an existing whole-space tally, so one pass can feed every check.
LuckyDistribution to_distribution(const EnumerationTally& tally);
PfSplit to_pf_split(const EnumerationTally& tally);
CompetingSplit to_competing_split(const EnumerationTally& tally);

}  // namespace lucky
