#include "lucky/quicksort.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "lucky/errors.hpp"

namespace lucky {

namespace {

// Sorts `seg` in place; `scratch` must be at least as long. Elements less
// than the pivot keep their relative order on the left, the rest on the right.
template <bool kRecord>
std::uint64_t sort_segment(std::span<SortKey> seg, std::span<SortKey> scratch,
                           std::size_t depth, std::vector<PivotStep>* log) {
  const std::size_t m = seg.size();
  if (m <= 1) return 0;
  const SortKey pivot = seg[m - 1];

  std::size_t step_index = 0;
  if constexpr (kRecord) {
    step_index = log->size();
    log->push_back(PivotStep{depth, {seg.begin(), seg.end()}, pivot, {}, {}});
  }

  std::size_t n_left = 0;
  std::size_t n_right = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (seg[i] <= pivot) {
      seg[n_left++] = seg[i];
    } else {
      scratch[n_right++] = seg[i];
    }
  }
  seg[n_left] = pivot;
  std::copy_n(scratch.begin(), n_right, seg.begin() + static_cast<std::ptrdiff_t>(n_left) + 1);

  auto left = seg.first(n_left);
  auto right = seg.subspan(n_left + 1);
  if constexpr (kRecord) {
    (*log)[step_index].left.assign(left.begin(), left.end());
    (*log)[step_index].right.assign(right.begin(), right.end());
  }
  return (m - 1) + sort_segment<kRecord>(left, scratch, depth + 1, log) +
         sort_segment<kRecord>(right, scratch, depth + 1, log);
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t factorial_u64(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Start of chunk k when [0, total) is cut into `parts` near-equal pieces.
std::uint64_t chunk_start(std::uint64_t total, std::uint64_t parts, std::uint64_t k) {
  return total / parts * k + std::min(k, total % parts);
}

void check_permutation_size(std::size_t n, const PermutationOptions& options) {
  // 20! is the last factorial that fits a 64-bit rank.
  const std::size_t cap = std::min<std::size_t>(options.max_n, 20);
  if (n < 1 || n > cap) {
    throw RangeError("permutation size n=" + std::to_string(n) + " outside [1, " +
                     std::to_string(cap) + "]");
  }
}

}  // namespace

SortTrace count_comparisons(std::span<const SortKey> input) {
  std::vector<SortKey> sorted(input.begin(), input.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("quicksort keys must be pairwise distinct");
  }

  SortTrace trace;
  trace.input.assign(input.begin(), input.end());
  trace.output = trace.input;
  std::vector<SortKey> scratch(input.size());
  trace.comparisons = sort_segment<true>(trace.output, scratch, 0, &trace.pivot_log);
  return trace;
}

BigCount count_from_pivot_ranks(std::span<const int> perm) {
  const std::size_t n = perm.size();
  // position[v] = index of value v in perm.
  std::vector<std::size_t> position(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = perm[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || position[v] != n) {
      throw InputError("input is not a permutation of [1, " + std::to_string(n) + "]");
    }
    position[v] = i;
  }

  // Segments are value intervals [lo, hi]; after stable partitioning they
  // appear in their original relative order, so their rightmost element is
  // the value with the largest original position.
  auto cost = [&](auto&& self, std::size_t lo, std::size_t hi) -> std::uint64_t {
    if (hi <= lo) return 0;
    std::size_t pivot = lo;
    for (std::size_t v = lo + 1; v <= hi; ++v) {
      if (position[v] > position[pivot]) pivot = v;
    }
    std::uint64_t total = hi - lo;
    if (pivot > lo) total += self(self, lo, pivot - 1);
    total += self(self, pivot + 1, hi);
    return total;
  };
  return n == 0 ? BigCount(0) : BigCount(cost(cost, 1, n));
}

std::vector<int> unrank_permutation(std::size_t n, std::uint64_t rank) {
  std::vector<int> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i + 1);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    const std::uint64_t block = factorial_u64(remaining - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

BigCount total_over_permutation_range(std::size_t n, std::uint64_t first, std::uint64_t last) {
  const std::uint64_t total_perms = factorial_u64(n);
  if (first > last || last > total_perms) {
    throw RangeError("permutation rank range outside [0, " + std::to_string(total_perms) + ")");
  }
  if (first == last) return 0;
  std::vector<int> perm = unrank_permutation(n, first);
  std::vector<SortKey> work(n);
  std::vector<SortKey> scratch(n);
  std::uint64_t total = 0;
  for (std::uint64_t r = first; r < last; ++r) {
    std::copy(perm.begin(), perm.end(), work.begin());
    total += sort_segment<false>(work, scratch, 0, nullptr);
    std::next_permutation(perm.begin(), perm.end());
  }
  return total;
}

BigCount total_over_all_permutations(std::size_t n, const PermutationOptions& options) {
  check_permutation_size(n, options);
  const std::uint64_t count = factorial_u64(n);
  const unsigned threads = resolve_threads(options.threads);
  if (threads == 1) return total_over_permutation_range(n, 0, count);

  std::vector<BigCount> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned k = 0; k < threads; ++k) {
      const std::uint64_t lo = chunk_start(count, threads, k);
      const std::uint64_t hi = chunk_start(count, threads, k + 1);
      workers.emplace_back([&, k, lo, hi] { partial[k] = total_over_permutation_range(n, lo, hi); });
    }
  }
  BigCount total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

ExactRational empirical_mean(std::size_t n, const PermutationOptions& options) {
  return ExactRational(total_over_all_permutations(n, options), factorial(n));
}

}  // namespace lucky
