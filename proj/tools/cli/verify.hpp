#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucky/numeric.hpp"

namespace lucky::cli {

// Values that disagreed, labelled by where they came from.
struct Witness {
  std::size_t n = 0;
  std::optional<std::size_t> i;
  std::vector<std::pair<std::string, std::string>> values;
  std::string note;
};

struct CheckRecord {
  std::string name;
  std::size_t range_lo = 0;
  std::size_t range_hi = 0;
  bool passed = true;
  // Set on failure (first failing n). Informational checks may also set it
  // when passing.
  std::optional<Witness> witness;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool passed() const;
  // {"checks":[{"name","range","status","witness"}],"status"}
  nlohmann::ordered_json to_json() const;
};

// Formulas the verifier compares against brute force. Tests swap in faulty
// versions to confirm the report catches them.
struct Formulas {
  std::function<BigCount(std::size_t)> recurrence_f;
  std::function<BigCount(std::size_t)> l_closed_form;
  std::function<BigCount(std::size_t)> a_total;
  std::function<BigCount(std::size_t)> a_stepwise;

  static Formulas standard();
};

struct VerifyOptions {
  std::size_t max_enum_n = 7;
  std::size_t max_seq_n = 100;
  unsigned threads = 0;
  // Random preference lists for the parking property check.
  std::size_t property_cases = 10000;
  std::size_t property_max_n = 12;
  std::uint64_t seed = 20240229;
  Formulas formulas = Formulas::standard();
};

// Runs every cross-module check. Caps are the caller's responsibility.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace lucky::cli
