#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lucky/numeric.hpp"

namespace lucky {

using SortKey = std::int64_t;

// One partition step: the segment handed to a recursive call, its pivot (the
// segment's rightmost element) and the two order-preserving partitions.
struct PivotStep {
  std::size_t depth = 0;  // 0 for the top-level call
  std::vector<SortKey> segment;
  SortKey pivot = 0;
  std::vector<SortKey> left;   // elements < pivot
  std::vector<SortKey> right;  // elements > pivot

  std::size_t length() const { return segment.size(); }
};

struct SortTrace {
  std::vector<SortKey> input;
  std::vector<SortKey> output;
  BigCount comparisons;
  // Calls on segments of length >= 2, in recursion (pre-)order.
  std::vector<PivotStep> pivot_log;
};

// Quicksort with the rightmost element as pivot and stable partitioning.
// Every call on m >= 2 elements costs m-1 pivot comparisons; there is no
// small-array cutoff. Throws InputError on duplicate keys.
SortTrace count_comparisons(std::span<const SortKey> input);

// Same count as count_comparisons, without running the sort: the pivot of a
// segment spanning the value ranks [lo, hi] is the rank in that interval
// that sits furthest right in `perm`. `perm` must be a permutation of [n]
// (1-based), otherwise InputError.
BigCount count_from_pivot_ranks(std::span<const int> perm);

struct PermutationOptions {
  // Largest accepted n (9! = 362,880 sorts).
  std::size_t max_n = 9;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Sum of count_comparisons over all n! orderings of [n]. RangeError outside
// 1 <= n <= options.max_n.
BigCount total_over_all_permutations(std::size_t n, const PermutationOptions& options = {});

// Total over permutations with lexicographic rank in [first, last).
BigCount total_over_permutation_range(std::size_t n, std::uint64_t first, std::uint64_t last);

// total_over_all_permutations(n) / n!.
ExactRational empirical_mean(std::size_t n, const PermutationOptions& options = {});

// Lexicographic unranking via the factorial number system (1-based values).
std::vector<int> unrank_permutation(std::size_t n, std::uint64_t rank);

}  // namespace lucky
