#include "lucky/parking.hpp"

#include <algorithm>
#include <string>

#include "lucky/errors.hpp"

namespace lucky {

PreferenceList::PreferenceList(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  if (prefs_.empty()) throw InputError("preference list must have at least one car");
  const auto n = static_cast<long>(prefs_.size());
  for (std::size_t i = 0; i < prefs_.size(); ++i) {
    if (prefs_[i] < 1 || prefs_[i] > n) {
      throw InputError("car " + std::to_string(i + 1) + " prefers spot " +
                       std::to_string(prefs_[i]) + ", outside [1, " + std::to_string(n) + "]");
    }
  }
}

std::size_t ParkingOutcome::lucky_count() const {
  return static_cast<std::size_t>(std::count(lucky.begin(), lucky.end(), true));
}

ParkingOutcome simulate(const PreferenceList& prefs) {
  const std::size_t n = prefs.size();
  std::vector<bool> occupied(n + 1, false);  // index 0 unused
  ParkingOutcome out;
  out.assignment.reserve(n);
  out.lucky.reserve(n);
  out.is_pf = true;
  for (int p : prefs.values()) {
    auto spot = static_cast<std::size_t>(p);
    while (spot <= n && occupied[spot]) ++spot;
    if (spot > n) {
      out.assignment.push_back(std::nullopt);
      out.lucky.push_back(false);
      out.is_pf = false;
      continue;
    }
    occupied[spot] = true;
    out.assignment.push_back(static_cast<int>(spot));
    out.lucky.push_back(spot == static_cast<std::size_t>(p));
  }
  return out;
}

std::size_t lucky_count(const PreferenceList& prefs) { return simulate(prefs).lucky_count(); }

bool is_parking_function(const PreferenceList& prefs) { return simulate(prefs).is_pf; }

bool satisfies_sorted_prefix_criterion(const PreferenceList& prefs) {
  std::vector<int> sorted(prefs.values().begin(), prefs.values().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<int>(i + 1)) return false;
  }
  return true;
}

}  // namespace lucky
