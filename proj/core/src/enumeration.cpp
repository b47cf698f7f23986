#include "lucky/enumeration.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>

#include "lucky/errors.hpp"

namespace lucky {

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// One value twice, every other value at most once.
bool has_single_duplicate(std::span<const std::uint8_t> prefs) {
  std::array<std::uint8_t, kEnumerationHardLimit + 1> seen{};
  int doubles = 0;
  for (std::uint8_t p : prefs) {
    const auto c = ++seen[p];
    if (c == 2) ++doubles;
    if (c > 2) return false;
  }
  return doubles == 1;
}

bool car1_competes(std::span<const std::uint8_t> prefs) {
  return std::find(prefs.begin() + 1, prefs.end(), prefs.front()) != prefs.end();
}

void require_at_least_two(std::size_t n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + " requires n >= 2, got " + std::to_string(n));
}

}  // namespace

void check_enumeration_size(std::size_t n, const EnumerationOptions& options) {
  const std::size_t cap = std::min(options.max_n, kEnumerationHardLimit);
  if (n < 1 || n > cap) {
    throw RangeError("enumeration size n=" + std::to_string(n) + " outside [1, " +
                     std::to_string(cap) + "]");
  }
}

std::uint64_t list_count(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  return total;
}

std::vector<std::uint8_t> unrank_list(std::size_t n, std::uint64_t rank) {
  std::vector<std::uint8_t> digits(n, 1);
  for (std::size_t pos = n; pos-- > 0;) {
    digits[pos] = static_cast<std::uint8_t>(rank % n + 1);
    rank /= n;
  }
  return digits;
}

ListRange::iterator::iterator(std::size_t n, std::uint64_t rank)
    : digits_(unrank_list(n, rank)), rank_(rank) {}

ListRange::iterator& ListRange::iterator::operator++() {
  const auto n = static_cast<std::uint8_t>(digits_.size());
  for (std::size_t pos = digits_.size(); pos-- > 0;) {
    if (digits_[pos] < n) {
      ++digits_[pos];
      break;
    }
    digits_[pos] = 1;
  }
  ++rank_;
  return *this;
}

ListRange::ListRange(std::size_t n, const EnumerationOptions& options)
    : ListRange(n, 0, list_count(std::min(n, kEnumerationHardLimit)), options) {}

ListRange::ListRange(std::size_t n, std::uint64_t first, std::uint64_t last,
                     const EnumerationOptions& options)
    : n_(n), first_(first), last_(last) {
  check_enumeration_size(n, options);
  if (first > last || last > list_count(n)) {
    throw RangeError("rank range [" + std::to_string(first) + ", " + std::to_string(last) +
                     ") is not inside [0, " + std::to_string(list_count(n)) + ")");
  }
}

ListRange::iterator ListRange::end() const {
  // Only the rank is compared, so the end sentinel skips unranking.
  iterator it;
  it.rank_ = last_;
  return it;
}

std::vector<ListRange> ListRange::split(std::size_t parts) const {
  parts = std::max<std::size_t>(1, parts);
  std::vector<ListRange> out;
  out.reserve(parts);
  const std::uint64_t total = size();
  std::uint64_t lo = first_;
  for (std::size_t k = 0; k < parts; ++k) {
    const std::uint64_t hi = first_ + total / parts * (k + 1) + std::min<std::uint64_t>(k + 1, total % parts);
    ListRange sub = *this;
    sub.first_ = lo;
    sub.last_ = hi;
    out.push_back(sub);
    lo = hi;
  }
  return out;
}

EnumerationTally::EnumerationTally(std::size_t size)
    : n(size), by_lucky(size + 1, 0), pf_by_lucky(size + 1, 0) {}

EnumerationTally& EnumerationTally::operator+=(const EnumerationTally& other) {
  if (other.n != n) throw ConsistencyError("merging tallies of different sizes");
  for (std::size_t k = 0; k <= n; ++k) {
    by_lucky[k] += other.by_lucky[k];
    pf_by_lucky[k] += other.pf_by_lucky[k];
  }
  near_lucky_car1_competing += other.near_lucky_car1_competing;
  near_lucky_malformed += other.near_lucky_malformed;
  return *this;
}

EnumerationTally tally_range(const ListRange& range) {
  const std::size_t n = range.n();
  EnumerationTally tally(n);
  if (range.size() == 0) return tally;
  std::vector<std::uint8_t> prefs = unrank_list(n, range.first());
  const auto top = static_cast<std::uint8_t>(n);
  for (std::uint64_t r = range.first(); r < range.last(); ++r) {
    const ParkingSummary s = park_summary(prefs);
    ++tally.by_lucky[s.lucky];
    if (s.is_pf) ++tally.pf_by_lucky[s.lucky];
    if (s.lucky + 1u == n) {
      if (!has_single_duplicate(prefs)) ++tally.near_lucky_malformed;
      if (car1_competes(prefs)) ++tally.near_lucky_car1_competing;
    }
    for (std::size_t pos = n; pos-- > 0;) {
      if (prefs[pos] < top) {
        ++prefs[pos];
        break;
      }
      prefs[pos] = 1;
    }
  }
  return tally;
}

EnumerationTally tally_all(std::size_t n, const EnumerationOptions& options) {
  const ListRange whole(n, options);
  const unsigned threads = resolve_threads(options.threads);
  if (threads == 1) return tally_range(whole);

  const auto chunks = whole.split(threads);
  std::vector<EnumerationTally> partial(chunks.size(), EnumerationTally(n));
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks.size());
    for (std::size_t k = 0; k < chunks.size(); ++k) {
      workers.emplace_back([&, k] { partial[k] = tally_range(chunks[k]); });
    }
  }
  EnumerationTally total(n);
  for (const auto& p : partial) total += p;
  return total;
}

LuckyDistribution to_distribution(const EnumerationTally& tally) {
  LuckyDistribution d;
  d.n = tally.n;
  d.all_lists.assign(tally.by_lucky.begin(), tally.by_lucky.end());
  d.pf_only.assign(tally.pf_by_lucky.begin(), tally.pf_by_lucky.end());
  return d;
}

PfSplit to_pf_split(const EnumerationTally& tally) {
  require_at_least_two(tally.n, "split_by_pf");
  const std::uint64_t all = tally.by_lucky[tally.n - 1];
  const std::uint64_t pf = tally.pf_by_lucky[tally.n - 1];
  return {BigCount(pf), BigCount(all - pf)};
}

CompetingSplit to_competing_split(const EnumerationTally& tally) {
  require_at_least_two(tally.n, "competing_car_split");
  if (tally.near_lucky_malformed != 0) {
    throw ConsistencyError(std::to_string(tally.near_lucky_malformed) +
                           " lists with n-1 lucky cars lack a unique duplicate (n=" +
                           std::to_string(tally.n) + ")");
  }
  const std::uint64_t all = tally.by_lucky[tally.n - 1];
  const std::uint64_t m = tally.near_lucky_car1_competing;
  return {tally.n, BigCount(all - m), BigCount(m)};
}

LuckyDistribution lucky_distribution(std::size_t n, const EnumerationOptions& options) {
  return to_distribution(tally_all(n, options));
}

BigCount count_lucky_n_minus_1(std::size_t n, const EnumerationOptions& options) {
  require_at_least_two(n, "count_lucky_n_minus_1");
  return BigCount(tally_all(n, options).by_lucky[n - 1]);
}

LuckyPolynomial pf_lucky_polynomial(std::size_t n, const EnumerationOptions& options) {
  const auto d = lucky_distribution(n, options);
  return LuckyPolynomial(d.pf_only);
}

PfSplit split_by_pf(std::size_t n, const EnumerationOptions& options) {
  require_at_least_two(n, "split_by_pf");
  return to_pf_split(tally_all(n, options));
}

CompetingSplit competing_car_split(std::size_t n, const EnumerationOptions& options) {
  require_at_least_two(n, "competing_car_split");
  return to_competing_split(tally_all(n, options));
}

}  // namespace lucky
