#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lucky/enumeration.hpp"
#include "lucky/errors.hpp"
#include "lucky/parking.hpp"
#include "lucky/quicksort.hpp"
#include "lucky/sequences.hpp"

namespace lucky::cli {

namespace {

std::size_t enumeration_cap(bool allow_big) {
  return allow_big ? kBigEnumerationCap : kDefaultEnumerationCap;
}

template <typename Range, typename Fn>
std::string join(const Range& values, Fn&& fmt) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += fmt(v);
  }
  return out;
}

std::string join_ints(const auto& values) {
  return join(values, [](auto v) { return std::to_string(v); });
}

// RFC 4180: quote when the field holds a comma, quote or line break.
std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_str(const std::optional<BigCount>& v) { return v ? to_string(*v) : ""; }

nlohmann::ordered_json optional_json(const std::optional<BigCount>& v) {
  return v ? nlohmann::ordered_json(to_string(*v)) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::vector<TableRow> build_table(const TableOptions& options) {
  if (options.max_n < 2) throw UsageError("--max-n must be at least 2");
  const std::size_t cap = enumeration_cap(options.allow_big);
  EnumerationOptions enum_opts{cap, options.threads};
  PermutationOptions perm_opts{cap, options.threads};
  std::vector<TableRow> rows;
  for (std::size_t n = 2; n <= options.max_n; ++n) {
    TableRow row;
    row.n = n;
    row.l_closed_form = l_closed_form(n);
    row.a_total = a_total(n);
    row.q_n = q_expected_closed(n);
    if (n <= cap) {
      row.brute_force_l = count_lucky_n_minus_1(n, enum_opts);
      row.quicksort_total = total_over_all_permutations(n, perm_opts);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table(const std::vector<TableRow>& rows, Format format, std::ostream& out) {
  if (format == Format::kCsv) {
    out << "n,L_n,A_n,Q_n,L_n_brute_force,quicksort_total\n";
    for (const auto& r : rows) {
      out << r.n << ',' << to_string(r.l_closed_form) << ',' << to_string(r.a_total) << ','
          << to_string(r.q_n) << ',' << optional_str(r.brute_force_l) << ','
          << optional_str(r.quicksort_total) << '\n';
    }
    return;
  }
  auto doc = nlohmann::ordered_json::object();
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["L_n"] = to_string(r.l_closed_form);
    row["A_n"] = to_string(r.a_total);
    row["Q_n"] = to_string(r.q_n);
    row["L_n_brute_force"] = optional_json(r.brute_force_l);
    row["quicksort_total"] = optional_json(r.quicksort_total);
    doc["rows"].push_back(row);
  }
  out << doc.dump(2) << '\n';
}

int cmd_table(const TableOptions& options, std::ostream& out) {
  write_table(build_table(options), options.format, out);
  return kExitOk;
}

int cmd_verify(const VerifyCommandOptions& options, std::ostream& out) {
  const std::size_t cap = enumeration_cap(options.allow_big);
  if (options.max_enum_n < 2) throw UsageError("--max-enum-n must be at least 2");
  if (options.max_enum_n > cap) {
    throw UsageError("--max-enum-n " + std::to_string(options.max_enum_n) + " exceeds the cap of " +
                     std::to_string(cap) +
                     (options.allow_big ? "" : "; pass --allow-big to enumerate up to n=9"));
  }
  if (options.max_seq_n < 2) throw UsageError("--max-seq-n must be at least 2");
  if (options.max_seq_n > kMaxSequenceN) {
    throw UsageError("--max-seq-n " + std::to_string(options.max_seq_n) + " exceeds the cap of " +
                     std::to_string(kMaxSequenceN));
  }
  VerifyOptions verify;
  verify.max_enum_n = options.max_enum_n;
  verify.max_seq_n = options.max_seq_n;
  verify.threads = options.threads;
  const VerificationReport report = run_verification(verify);
  out << report.to_json().dump(2) << '\n';
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

std::vector<std::int64_t> parse_keys(const std::string& text) {
  std::vector<std::int64_t> keys;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty key in '" + text + "'");
    const char* begin = token.data() + first;
    const char* end = token.data() + last + 1;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw UsageError("not an integer key: '" + token + "'");
    keys.push_back(value);
  }
  if (keys.empty()) throw UsageError("no keys given");
  return keys;
}

int cmd_quicksort(const std::string& keys, bool trace, std::ostream& out) {
  const auto input = parse_keys(keys);
  SortTrace result;
  try {
    result = count_comparisons(input);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (trace) {
    std::map<std::size_t, std::vector<const PivotStep*>> levels;
    for (const auto& step : result.pivot_log) levels[step.depth].push_back(&step);
    for (const auto& [depth, steps] : levels) {
      out << "level " << depth + 1 << ":\n";
      for (const PivotStep* s : steps) {
        out << "  (" << join_ints(s->segment) << ") pivot " << s->pivot << " -> ("
            << join_ints(s->left) << ") / (" << join_ints(s->right) << ")\n";
      }
    }
    out << "sorted: (" << join_ints(result.output) << ")\n";
  }
  out << "comparisons: " << to_string(result.comparisons) << '\n';
  return kExitOk;
}

int cmd_enumerate(const EnumerateOptions& options, std::ostream& out) {
  const std::size_t cap = enumeration_cap(options.allow_big);
  if (options.n < 1) throw UsageError("n must be at least 1");
  if (options.n > cap) {
    throw UsageError("n=" + std::to_string(options.n) + " exceeds the enumeration cap of " +
                     std::to_string(cap) +
                     (options.allow_big ? "" : "; pass --allow-big to enumerate up to n=9"));
  }
  out << "list,lucky,is_pf,assignment\n";
  for (const auto& prefs : ListRange(options.n, EnumerationOptions{cap, 1})) {
    const ParkingSummary s = park_summary(prefs);
    if (options.lucky && s.lucky != *options.lucky) continue;
    if (options.pf_only && !s.is_pf) continue;
    const PreferenceList list(std::vector<int>(prefs.begin(), prefs.end()));
    const ParkingOutcome outcome = simulate(list);
    const std::string assignment = join(outcome.assignment, [](const std::optional<int>& spot) {
      return spot ? std::to_string(*spot) : std::string("FAILED");
    });
    out << csv_field(join_ints(list.values())) << ',' << outcome.lucky_count() << ','
        << (outcome.is_pf ? "true" : "false") << ',' << csv_field(assignment) << '\n';
  }
  return kExitOk;
}

int cmd_poly(const PolyOptions& options, std::ostream& out) {
  const std::size_t cap = enumeration_cap(options.allow_big);
  if (options.max_n < 1) throw UsageError("--max-n must be at least 1");
  if (options.max_n > cap) {
    throw UsageError("--max-n " + std::to_string(options.max_n) + " exceeds the enumeration cap of " +
                     std::to_string(cap));
  }
  struct Row {
    std::size_t n;
    LuckyPolynomial brute, formula, to_n;
  };
  std::vector<Row> rows;
  for (std::size_t n = 1; n <= options.max_n; ++n) {
    rows.push_back({n, pf_lucky_polynomial(n, EnumerationOptions{cap, options.threads}),
                    gessel_seo_rhs(n), gessel_seo_full_product(n)});
  }
  if (options.format == Format::kCsv) {
    out << "n,pf_lucky_polynomial,gessel_seo_rhs,match,product_to_n\n";
    for (const auto& r : rows) {
      out << r.n << ',' << csv_field(to_string(r.brute)) << ',' << csv_field(to_string(r.formula))
          << ',' << (r.brute == r.formula ? "true" : "false") << ','
          << csv_field(to_string(r.to_n)) << '\n';
    }
  } else {
    auto doc = nlohmann::ordered_json::object();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["n"] = r.n;
      row["pf_lucky_polynomial"] = to_string(r.brute);
      row["gessel_seo_rhs"] = to_string(r.formula);
      row["match"] = r.brute == r.formula;
      row["product_to_n"] = to_string(r.to_n);
      doc["rows"].push_back(row);
    }
    out << doc.dump(2) << '\n';
  }
  const bool all_match = std::all_of(rows.begin(), rows.end(),
                                     [](const Row& r) { return r.brute == r.formula; });
  return all_match ? kExitOk : kExitVerificationFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lucky cars and Quicksort comparison counts: enumeration and exact formulas"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"csv", Format::kCsv}, {"json", Format::kJson}};

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate L_n, A_n, Q_n and brute-force counts");
  table_cmd->add_option("--max-n", table.max_n, "Largest n (>= 2)")->capture_default_str();
  table_cmd->add_option("--format", table.format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  table_cmd->add_option("--threads", table.threads, "Worker threads (0 = all cores)");
  table_cmd->add_flag("--allow-big", table.allow_big, "Enumerate up to n=9");

  VerifyCommandOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check and print a JSON report");
  verify_cmd->add_option("--max-enum-n", verify.max_enum_n, "Largest enumerated n")
      ->capture_default_str();
  verify_cmd->add_option("--max-seq-n", verify.max_seq_n, "Largest n for formula checks")
      ->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_flag("--allow-big", verify.allow_big, "Enumerate up to n=9");

  std::string keys;
  bool trace = false;
  auto* qs_cmd = app.add_subcommand("quicksort", "Count pivot comparisons for one ordering");
  qs_cmd->add_option("keys", keys, "Comma-separated distinct integers")->required();
  qs_cmd->add_flag("--trace", trace, "Print each partition level");

  EnumerateOptions enumerate;
  std::size_t lucky_filter = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream preference lists in [n]^n as CSV");
  enum_cmd->add_option("n", enumerate.n, "Number of cars / spots")->required();
  auto* lucky_opt = enum_cmd->add_option("--lucky", lucky_filter, "Keep lists with this many lucky cars");
  enum_cmd->add_flag("--pf-only", enumerate.pf_only, "Keep parking functions only");
  enum_cmd->add_flag("--allow-big", enumerate.allow_big, "Enumerate up to n=9");

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "Lucky polynomial over parking functions vs product formula");
  poly_cmd->add_option("--max-n", poly.max_n, "Largest n")->capture_default_str();
  poly_cmd->add_option("--format", poly.format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  poly_cmd->add_option("--threads", poly.threads, "Worker threads (0 = all cores)");
  poly_cmd->add_flag("--allow-big", poly.allow_big, "Enumerate up to n=9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*qs_cmd) return cmd_quicksort(keys, trace, out);
    if (*enum_cmd) {
      if (*lucky_opt) enumerate.lucky = lucky_filter;
      return cmd_enumerate(enumerate, out);
    }
    if (*poly_cmd) return cmd_poly(poly, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lucky::cli
