#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lucky {

// A preference list (p_1, ..., p_n) in [n]^n. Spots and cars are 1-based in
// every public contract.
class PreferenceList {
 public:
  // Throws InputError when empty or when some entry is outside [1, n].
  explicit PreferenceList(std::vector<int> prefs);
  PreferenceList(std::initializer_list<int> prefs)
      : PreferenceList(std::vector<int>(prefs)) {}

  std::size_t size() const { return prefs_.size(); }
  // Preference of car `car` (1-based).
  int preference(std::size_t car) const { return prefs_.at(car - 1); }
  std::span<const int> values() const { return prefs_; }

  friend bool operator==(const PreferenceList&, const PreferenceList&) = default;

 private:
  std::vector<int> prefs_;
};

struct ParkingOutcome {
  // assignment[i] is the spot taken by car i+1, or nullopt if it failed.
  std::vector<std::optional<int>> assignment;
  std::vector<bool> lucky;
  bool is_pf = false;

  std::size_t lucky_count() const;
};

// Runs the one-way street: each car takes the first free spot at or after
// its preference; a car that finds none leaves and later cars still try.
ParkingOutcome simulate(const PreferenceList& prefs);

std::size_t lucky_count(const PreferenceList& prefs);

bool is_parking_function(const PreferenceList& prefs);

// Classical characterization: sorted b satisfies b_i <= i for all i.
// Independent of the parking simulation.
bool satisfies_sorted_prefix_criterion(const PreferenceList& prefs);

// Largest n accepted by park_summary (one occupancy bit per spot).
inline constexpr std::size_t kMaxSummaryLength = 63;

struct ParkingSummary {
  std::uint8_t lucky = 0;
  bool is_pf = false;
};

// Allocation-free parking kernel for the enumeration hot loop. Preferences
// are 1-based; the caller guarantees 1 <= p <= prefs.size() <= 63. The next
// free spot is found with a bit scan over the occupancy mask.
inline ParkingSummary park_summary(std::span<const std::uint8_t> prefs) {
  const auto n = static_cast<unsigned>(prefs.size());
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t occupied = 0;
  ParkingSummary out;
  out.is_pf = true;
  for (std::uint8_t p : prefs) {
    // Free spots at index >= p-1 (bit i is spot i+1).
    const std::uint64_t free_from = ~occupied & all & (~std::uint64_t{0} << (p - 1));
    if (free_from == 0) {
      out.is_pf = false;
      continue;
    }
    const std::uint64_t bit = free_from & (~free_from + 1);
    occupied |= bit;
    if (bit == (std::uint64_t{1} << (p - 1))) ++out.lucky;
  }
  return out;
}

}  // namespace lucky
