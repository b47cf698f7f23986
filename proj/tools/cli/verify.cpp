#include "cli/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "lucky/enumeration.hpp"
#include "lucky/errors.hpp"
#include "lucky/parking.hpp"
#include "lucky/quicksort.hpp"
#include "lucky/sequences.hpp"

namespace lucky::cli {

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

// Runs `probe` for n = lo..hi and stops at the first n where it returns a
// witness.
template <typename Probe>
CheckRecord run_check(std::string name, std::size_t lo, std::size_t hi, Probe probe) {
  CheckRecord rec{std::move(name), lo, hi, true, std::nullopt};
  for (std::size_t n = lo; n <= hi; ++n) {
    std::optional<Witness> w;
    try {
      w = probe(n);
    } catch (const std::exception& e) {
      w = Witness{n, std::nullopt, {}, std::string("exception: ") + e.what()};
    }
    if (w) {
      w->n = n;
      rec.passed = false;
      rec.witness = std::move(w);
      break;
    }
  }
  return rec;
}

bool all_equal(const Values& values) {
  return std::all_of(values.begin(), values.end(),
                     [&](const auto& v) { return v.second == values.front().second; });
}

std::optional<Witness> unless_equal(Values values) {
  if (all_equal(values)) return std::nullopt;
  return Witness{0, std::nullopt, std::move(values), {}};
}

// Whole-space tallies, computed once per n and shared by every brute-force
// check.
class TallyCache {
 public:
  explicit TallyCache(unsigned threads) : threads_(threads) {}

  const EnumerationTally& get(std::size_t n) {
    auto it = tallies_.find(n);
    if (it == tallies_.end()) {
      EnumerationOptions opts;
      opts.max_n = kEnumerationHardLimit;
      opts.threads = threads_;
      it = tallies_.emplace(n, tally_all(n, opts)).first;
    }
    return it->second;
  }

  BigCount near_lucky(std::size_t n) { return BigCount(get(n).by_lucky[n - 1]); }

 private:
  unsigned threads_;
  std::map<std::size_t, EnumerationTally> tallies_;
};

std::string poly_str(const LuckyPolynomial& p) { return to_string(p); }

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

nlohmann::ordered_json VerificationReport::to_json() const {
  auto out = nlohmann::ordered_json::object();
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json rec;
    rec["name"] = c.name;
    rec["range"] = std::to_string(c.range_lo) + ".." + std::to_string(c.range_hi);
    rec["status"] = c.passed ? "pass" : "fail";
    if (c.witness) {
      nlohmann::ordered_json w;
      w["n"] = c.witness->n;
      if (c.witness->i) w["i"] = *c.witness->i;
      auto values = nlohmann::ordered_json::object();
      for (const auto& [label, value] : c.witness->values) values[label] = value;
      w["values"] = values;
      if (!c.witness->note.empty()) w["note"] = c.witness->note;
      rec["witness"] = w;
    } else {
      rec["witness"] = nullptr;
    }
    out["checks"].push_back(rec);
  }
  out["status"] = passed() ? "pass" : "fail";
  return out;
}

Formulas Formulas::standard() {
  return {lucky::recurrence_f, lucky::l_closed_form, lucky::a_total, lucky::a_stepwise};
}

VerificationReport run_verification(const VerifyOptions& options) {
  const Formulas& f = options.formulas;
  const std::size_t E = options.max_enum_n;
  const std::size_t S = options.max_seq_n;
  TallyCache tallies(options.threads);
  PermutationOptions perm_opts;
  perm_opts.max_n = 20;
  perm_opts.threads = options.threads;
  std::map<std::size_t, BigCount> qs_totals;
  auto qs_total = [&](std::size_t n) -> const BigCount& {
    auto it = qs_totals.find(n);
    if (it == qs_totals.end()) it = qs_totals.emplace(n, total_over_all_permutations(n, perm_opts)).first;
    return it->second;
  };

  VerificationReport report;
  auto& checks = report.checks;

  checks.push_back(run_check("main_theorem", 2, E, [&](std::size_t n) {
    return unless_equal({{"brute_force_L_n", to_string(tallies.near_lucky(n))},
                         {"l_closed_form", to_string(f.l_closed_form(n))},
                         {"recurrence_f", to_string(f.recurrence_f(n))},
                         {"a_total", to_string(f.a_total(n))}});
  }));

  checks.push_back(run_check("quicksort_totals", 1, E, [&](std::size_t n) {
    return unless_equal({{"quicksort_total", to_string(qs_total(n))},
                         {"a_total", to_string(f.a_total(n))}});
  }));

  checks.push_back(run_check("exact_expectation", 1, E, [&](std::size_t n) {
    return unless_equal({{"empirical_mean", to_string(ExactRational(qs_total(n), factorial(n)))},
                         {"q_expected_closed", to_string(q_expected_closed(n))}});
  }));

  checks.push_back(run_check("quicksort_rank_oracle", 1, std::min<std::size_t>(E, 8),
                             [&](std::size_t n) -> std::optional<Witness> {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      const std::vector<SortKey> keys(perm.begin(), perm.end());
      const BigCount sorted = count_comparisons(keys).comparisons;
      const BigCount ranks = count_from_pivot_ranks(perm);
      if (sorted != ranks) {
        std::string list;
        for (int v : perm) list += (list.empty() ? "" : ",") + std::to_string(v);
        return Witness{n, std::nullopt,
                       {{"count_comparisons", to_string(sorted)},
                        {"count_from_pivot_ranks", to_string(ranks)}},
                       "permutation " + list};
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }));

  checks.push_back(run_check("q_recursive_vs_closed", 0, S, [&](std::size_t n) {
    return unless_equal({{"q_expected_recursive", to_string(q_expected_recursive(n))},
                         {"q_expected_closed", to_string(q_expected_closed(n))}});
  }));

  checks.push_back(run_check("telescoped_relation", 1, S, [&](std::size_t n) {
    const ExactRational lhs = ExactRational(n) * q_expected_closed(n);
    const ExactRational rhs =
        ExactRational(n + 1) * q_expected_closed(n - 1) + 2 * ExactRational(n - 1);
    return unless_equal({{"n*Q_n", to_string(lhs)}, {"(n+1)*Q_{n-1}+2(n-1)", to_string(rhs)}});
  }));

  checks.push_back(run_check("a_sequence_agreement", 0, S, [&](std::size_t n) {
    return unless_equal({{"a_stepwise", to_string(f.a_stepwise(n))},
                         {"recurrence_f", to_string(f.recurrence_f(n))},
                         {"a_total", to_string(f.a_total(n))}});
  }));

  checks.push_back(run_check("l_closed_form_vs_recurrence", 2, S, [&](std::size_t n) {
    return unless_equal({{"l_closed_form", to_string(f.l_closed_form(n))},
                         {"recurrence_f", to_string(f.recurrence_f(n))}});
  }));

  checks.push_back(run_check("case_split_formula", 2, S, [&](std::size_t n) -> std::optional<Witness> {
    const BigCount unable = count_unable_to_park(n);
    const BigCount able = count_able_to_park(n);
    const BigCount total = f.l_closed_form(n);
    if (unable == able && unable + able == total) return std::nullopt;
    return Witness{n, std::nullopt,
                   {{"count_unable_to_park", to_string(unable)},
                    {"count_able_to_park", to_string(able)},
                    {"l_closed_form", to_string(total)}},
                   {}};
  }));

  checks.push_back(run_check("case_split_brute_force", 2, E, [&](std::size_t n) -> std::optional<Witness> {
    const PfSplit split = to_pf_split(tallies.get(n));
    const BigCount total = tallies.near_lucky(n);
    const BigCount half = total / 2;
    if (total % 2 == 0 && split.pf_part == half && split.non_pf_part == half &&
        split.non_pf_part == count_unable_to_park(n) && split.pf_part == count_able_to_park(n)) {
      return std::nullopt;
    }
    return Witness{n, std::nullopt,
                   {{"pf_part", to_string(split.pf_part)},
                    {"non_pf_part", to_string(split.non_pf_part)},
                    {"L_n", to_string(total)},
                    {"count_able_to_park", to_string(count_able_to_park(n))},
                    {"count_unable_to_park", to_string(count_unable_to_park(n))}},
                   {}};
  }));

  checks.push_back(run_check("competing_car_decomposition", 3, E,
                             [&](std::size_t n) -> std::optional<Witness> {
    const CompetingSplit cur = to_competing_split(tallies.get(n));
    const CompetingSplit prev = to_competing_split(tallies.get(n - 1));
    const BigCount expect_n = BigCount(n) * tallies.near_lucky(n - 1);
    const BigCount expect_m = BigCount(n) * prev.m_count + 2 * factorial(n - 1);
    if (cur.n_count == expect_n && cur.m_count == expect_m) return std::nullopt;
    return Witness{n, std::nullopt,
                   {{"N_n", to_string(cur.n_count)},
                    {"n*L_{n-1}", to_string(expect_n)},
                    {"M_n", to_string(cur.m_count)},
                    {"n*M_{n-1}+2(n-1)!", to_string(expect_m)}},
                   {}};
  }));

  checks.push_back(run_check("binomial_identity", 2, S, [&](std::size_t n) -> std::optional<Witness> {
    for (std::size_t i = 2; i <= n; ++i) {
      const IdentitySides s = binomial_identity_check(n, i);
      if (s.lhs != s.rhs) {
        return Witness{n, i, {{"lhs", to_string(s.lhs)}, {"rhs", to_string(s.rhs)}}, {}};
      }
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("gessel_seo_polynomial", 1, E, [&](std::size_t n) {
    const LuckyPolynomial brute(to_distribution(tallies.get(n)).pf_only);
    return unless_equal({{"pf_lucky_polynomial", poly_str(brute)},
                         {"gessel_seo_rhs", poly_str(gessel_seo_rhs(n))}});
  }));

  checks.push_back(run_check("gessel_seo_at_one", 1, S, [&](std::size_t n) {
    return unless_equal({{"gessel_seo_rhs(1)", to_string(gessel_seo_rhs(n).evaluate(1))},
                         {"pf_count", to_string(pf_count(n))}});
  }));

  // The product written with upper limit n never matches; the check passes
  // when that mismatch is observed at every n and reports the first one.
  {
    CheckRecord rec = run_check("gessel_seo_printed_upper_limit", 1, E,
                                [&](std::size_t n) -> std::optional<Witness> {
      const LuckyPolynomial brute(to_distribution(tallies.get(n)).pf_only);
      if (gessel_seo_full_product(n) != brute) return std::nullopt;
      return Witness{n, std::nullopt,
                     {{"pf_lucky_polynomial", poly_str(brute)},
                      {"product_to_n", poly_str(gessel_seo_full_product(n))}},
                     "product with upper limit n unexpectedly matches brute force"};
    });
    if (rec.passed) {
      const LuckyPolynomial brute(to_distribution(tallies.get(1)).pf_only);
      rec.witness = Witness{1, std::nullopt,
                            {{"pf_lucky_polynomial", poly_str(brute)},
                             {"product_to_n", poly_str(gessel_seo_full_product(1))},
                             {"product_to_n_minus_1", poly_str(gessel_seo_rhs(1))}},
                            "product must stop at i = n-1; with upper limit n its value at q=1 "
                            "is (n+1)^n instead of (n+1)^(n-1)"};
    }
    checks.push_back(std::move(rec));
  }

  checks.push_back(run_check("lucky_distribution_invariants", 1, E,
                             [&](std::size_t n) -> std::optional<Witness> {
    const EnumerationTally& t = tallies.get(n);
    const auto sum = [](const std::vector<std::uint64_t>& v) {
      return std::accumulate(v.begin(), v.end(), BigCount(0),
                             [](BigCount a, std::uint64_t b) { return a + b; });
    };
    const BigCount all = sum(t.by_lucky);
    const BigCount pf = sum(t.pf_by_lucky);
    bool ok = all == BigCount(list_count(n)) && pf == pf_count(n) && t.by_lucky[0] == 0 &&
              t.pf_by_lucky[0] == 0 && t.near_lucky_malformed == 0;
    for (std::size_t k = 0; k <= n; ++k) ok = ok && t.pf_by_lucky[k] <= t.by_lucky[k];
    if (ok) return std::nullopt;
    return Witness{n, std::nullopt,
                   {{"sum_all_lists", to_string(all)},
                    {"n^n", std::to_string(list_count(n))},
                    {"sum_pf_only", to_string(pf)},
                    {"(n+1)^(n-1)", to_string(pf_count(n))},
                    {"malformed_near_lucky", std::to_string(t.near_lucky_malformed)}},
                   {}};
  }));

  checks.push_back(run_check("parking_properties", 1, options.property_max_n,
                             [&](std::size_t n) -> std::optional<Witness> {
    std::mt19937_64 rng(options.seed + n);
    std::uniform_int_distribution<int> spot(1, static_cast<int>(n));
    const std::size_t cases = options.property_cases / options.property_max_n + 1;
    std::vector<int> prefs(n);
    for (std::size_t c = 0; c < cases; ++c) {
      for (auto& p : prefs) p = spot(rng);
      const bool make_perm = c % 4 == 0;
      if (make_perm) {
        std::iota(prefs.begin(), prefs.end(), 1);
        std::shuffle(prefs.begin(), prefs.end(), rng);
      }
      const PreferenceList list(prefs);
      const ParkingOutcome out = simulate(list);
      const std::vector<std::uint8_t> small(prefs.begin(), prefs.end());
      const ParkingSummary fast = park_summary(small);
      const std::size_t lucky = out.lucky_count();
      const bool ok = lucky >= 1 && out.lucky[0] &&
                      out.is_pf == satisfies_sorted_prefix_criterion(list) &&
                      fast.lucky == lucky && fast.is_pf == out.is_pf &&
                      (!make_perm || (lucky == n && out.is_pf));
      if (!ok) {
        std::string text;
        for (int p : prefs) text += (text.empty() ? "" : ",") + std::to_string(p);
        return Witness{n, std::nullopt,
                       {{"lucky_count", std::to_string(lucky)},
                        {"park_summary_lucky", std::to_string(fast.lucky)},
                        {"is_pf", out.is_pf ? "true" : "false"},
                        {"sorted_prefix", satisfies_sorted_prefix_criterion(list) ? "true" : "false"}},
                       "preferences " + text};
      }
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("figure_reproduction", 8, 8, [&](std::size_t) -> std::optional<Witness> {
    const std::vector<SortKey> input{2, 5, 3, 1, 8, 7, 6, 4};
    const SortTrace trace = count_comparisons(input);
    const auto& first = trace.pivot_log.front();
    const bool ok = trace.comparisons == 14 && first.pivot == 4 &&
                    first.left == std::vector<SortKey>{2, 3, 1} &&
                    first.right == std::vector<SortKey>{5, 8, 7, 6};
    if (ok) return std::nullopt;
    return Witness{8, std::nullopt,
                   {{"comparisons", to_string(trace.comparisons)},
                    {"first_pivot", std::to_string(first.pivot)}},
                   {}};
  }));

  return report;
}

}  // namespace lucky::cli
