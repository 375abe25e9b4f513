#include "seqforge/cli.hpp"

#include "seqforge/discovery.hpp"
#include "seqforge/identities.hpp"
#include "seqforge/sequence_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace seqforge::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

/// Raised for malformed flag combinations detected after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConditionFlags {
  Index alpha = 0;
  Index beta = 0;
  std::string gap_parity = "any";
  Index min_size = 0;
  Index forced_max = 0;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* forced_max_opt = nullptr;

  void attach(CLI::App* cmd) {
    alpha_opt = cmd->add_option("--alpha", alpha, "Schreier parameter: min S >= alpha |S|")->check(CLI::PositiveNumber);
    beta_opt = cmd->add_option("--beta", beta, "Zeckendorf parameter: gaps >= beta")->check(CLI::PositiveNumber);
    cmd->add_option("--gap-parity", gap_parity, "Gap parity clause")
        ->check(CLI::IsMember({"any", "odd", "even"}))
        ->capture_default_str();
    cmd->add_option("--min-size", min_size, "Minimum cardinality")->check(CLI::NonNegativeNumber);
    forced_max_opt = cmd->add_option("--forced-max", forced_max, "Required maximum element")
                         ->check(CLI::PositiveNumber);
  }

  Condition build() const {
    Condition c;
    if (alpha_opt->count()) c.alpha = alpha;
    if (beta_opt->count()) c.beta = beta;
    c.gap_parity = gap_parity == "odd"    ? GapParity::all_odd
                   : gap_parity == "even" ? GapParity::all_even
                                          : GapParity::any;
    c.min_size = min_size;
    if (forced_max_opt->count()) c.forced_max = forced_max;
    return c;
  }
};

struct Limits {
  int flag = 0;
  CLI::Option* flag_opt = nullptr;

  void attach(CLI::App* cmd) {
    flag_opt = cmd->add_option("--limit", flag, "Exhaustive enumeration limit on n")
                   ->check(CLI::Range(0, kMaxEnumLimit));
  }

  int resolve(const std::optional<std::string>& env) const {
    if (flag_opt->count()) return flag;
    if (env && !env->empty()) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(*env, &used);
        if (used == env->size() && value >= 0 && value <= kMaxEnumLimit) return value;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string(kLimitEnvVar) + " must be an integer in 0.." + std::to_string(kMaxEnumLimit));
    }
    return kDefaultEnumLimit;
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << text;
}

// ---------------------------------------------------------------- families

struct FamilyParams {
  Index n = 3;
  Index alpha = 1;
  Index beta = 1;
  Index k = 2;
};

struct FamilyInfo {
  Index offset;
  std::function<SequenceWindow(const FamilyParams&, Index)> build;  // offset..to
};

SequenceWindow with_id(SequenceWindow w, std::string id) {
  w.id = std::move(id);
  return w;
}

template <class Fn>
SequenceWindow tabulate(std::string id, Index offset, Index to, Fn term) {
  SequenceWindow w{std::move(id), offset, {}};
  for (Index i = offset; i <= to; ++i) w.terms.push_back(term(i));
  return w;
}

const std::map<std::string, FamilyInfo>& families() {
  static const std::map<std::string, FamilyInfo> table = {
      {"fib", {0, [](const FamilyParams&, Index to) { return fibonacci_seq(to); }}},
      {"H", {0, [](const FamilyParams&, Index to) { return h_seq(to); }}},
      {"genfib", {0, [](const FamilyParams& p, Index to) { return gen_fib_seq(p.n, to); }}},
      {"genK", {0, [](const FamilyParams& p, Index to) { return gen_k_seq(p.n, to); }}},
      {"genH", {0, [](const FamilyParams& p, Index to) { return gen_h_seq(p.n, to); }}},
      {"schreier-zeckendorf",
       {1, [](const FamilyParams& p, Index to) { return schreier_zeckendorf_seq(p.alpha, p.beta, to); }}},
      {"zeckendorf", {0, [](const FamilyParams& p, Index to) { return zeckendorf_seq(p.beta, to); }}},
      {"minsize-oddgap", {1, [](const FamilyParams& p, Index to) { return min_size_odd_gap_seq(p.k, to); }}},
      {"oddgap-contain",
       {1, [](const FamilyParams&, Index to) {
          SequenceWindow fib = fibonacci_seq(to + 1);
          fib.terms.erase(fib.terms.begin(), fib.terms.begin() + 2);
          return with_id(SequenceWindow{"", 1, std::move(fib.terms)}, "oddgap-contain");
        }}},
      {"oddgap-total",
       {1, [](const FamilyParams&, Index to) {
          return tabulate("oddgap-total", 1, to, [](Index n) { return odd_gap_counts(n).total; });
        }}},
      {"evengap-contain",
       {1, [](const FamilyParams&, Index to) {
          return tabulate("evengap-contain", 1, to, [](Index n) { return even_gap_counts(n).contain_n; });
        }}},
      {"evengap-total",
       {1, [](const FamilyParams&, Index to) {
          return tabulate("evengap-total", 1, to, [](Index n) { return even_gap_counts(n).total; });
        }}},
  };
  return table;
}

std::string family_names() {
  std::string names;
  for (const auto& [name, info] : families()) names += (names.empty() ? "" : ", ") + name;
  return names;
}

SequenceWindow build_window(const std::string& family, const FamilyParams& params, std::optional<Index> from,
                            Index to) {
  const auto it = families().find(family);
  if (it == families().end()) throw UsageError("unknown family '" + family + "' (known: " + family_names() + ")");
  const Index offset = it->second.offset;
  const Index first = from.value_or(offset);
  if (first < offset) throw UsageError("family " + family + " starts at index " + std::to_string(offset));
  if (to < first) throw UsageError("--to must be >= the first index");
  SequenceWindow w = it->second.build(params, to);
  w.terms.erase(w.terms.begin(), w.terms.begin() + (first - offset));
  w.offset = first;
  return w;
}

// ---------------------------------------------------------------- commands

std::string render_subset_list(const std::vector<Subset>& subsets) {
  std::string out;
  for (const Subset& s : subsets) out += s.to_string() + "\n";
  return out;
}

ordered_json report_json(const IdentityReport& r) {
  ordered_json j;
  j["id"] = r.identity_id;
  j["range"] = {r.range_first, r.range_last};
  j["passed"] = r.passed;
  if (r.first_counterexample) {
    j["counterexample"] = {{"index", r.first_counterexample->index},
                           {"lhs", to_decimal_string(r.first_counterexample->lhs)},
                           {"rhs", to_decimal_string(r.first_counterexample->rhs)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string report_line(const IdentityReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.identity_id << " [" << r.range_first << ".." << r.range_last << "]";
  if (r.first_counterexample) {
    os << " first counterexample at " << r.first_counterexample->index
       << ": lhs=" << to_decimal_string(r.first_counterexample->lhs)
       << " rhs=" << to_decimal_string(r.first_counterexample->rhs);
  }
  os << '\n';
  return os.str();
}

std::string rational_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

struct VerifyOptions {
  std::string id;
  Index to = 0;
  CLI::Option* to_opt = nullptr;
  Index n = 0;
  CLI::Option* n_opt = nullptr;
  Index alpha = 0;
  CLI::Option* alpha_opt = nullptr;
  Index beta = 0;
  CLI::Option* beta_opt = nullptr;
  std::string threshold = "1e-3";
  std::string format = "table";
  std::string output;
  Limits limits;
};

const std::vector<std::string> kIdentityIds = {"fib-h",  "gen-sum",   "gen-shift", "odd-gap-h", "odd-gap",
                                               "even-gap", "schreier-zeckendorf", "bijection",
                                               "parity-intersection", "ratio"};

int cmd_verify(const VerifyOptions& o, const std::optional<std::string>& env, std::ostream& out) {
  const int limit = o.limits.resolve(env);
  const bool has_to = o.to_opt->count() > 0;
  auto range_or = [&](Index fallback) { return has_to ? o.to : fallback; };
  // Enumeration-backed checks keep their default range under `all`.
  auto oracle_range = [&](Index fallback, bool all) { return all && has_to ? std::min(o.to, fallback) : range_or(fallback); };
  auto params = [](CLI::Option* opt, Index value, Index lo, Index hi) {
    std::vector<Index> out;
    if (opt->count()) {
      out.push_back(value);
    } else {
      for (Index v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
  };

  std::vector<IdentityReport> reports;
  std::optional<ConvergenceReport> convergence;
  std::optional<Rational> threshold;
  auto run_id = [&](const std::string& id, bool all) {
    if (id == "fib-h") {
      reports.push_back(check_fib_h(range_or(200)));
    } else if (id == "gen-sum") {
      for (Index n : params(o.n_opt, o.n, 2, 8)) reports.push_back(check_gen_sum(n, range_or(300)));
    } else if (id == "gen-shift") {
      for (Index n : params(o.n_opt, o.n, 2, 8)) reports.push_back(check_gen_shift(n, range_or(300)));
    } else if (id == "odd-gap-h") {
      const Index dp = range_or(500);
      reports.push_back(check_odd_gap_h(std::min<Index>(dp, 20), dp, limit));
    } else if (id == "odd-gap") {
      reports.push_back(check_odd_gap_counts(oracle_range(20, all), limit));
    } else if (id == "even-gap") {
      reports.push_back(check_even_gap_counts(oracle_range(20, all), limit));
    } else if (id == "parity-intersection") {
      reports.push_back(check_parity_intersection(oracle_range(20, all), limit));
    } else if (id == "schreier-zeckendorf") {
      for (Index a : params(o.alpha_opt, o.alpha, 1, 3))
        for (Index b : params(o.beta_opt, o.beta, 1, 3))
          reports.push_back(check_schreier_zeckendorf(a, b, oracle_range(18, all), limit));
    } else if (id == "bijection") {
      for (Index a : params(o.alpha_opt, o.alpha, 1, 3))
        for (Index b : params(o.beta_opt, o.beta, 1, 3))
          reports.push_back(check_bijection(a, b, oracle_range(15, all), limit));
    } else if (id == "ratio") {
      threshold = parse_decimal(o.threshold);
      convergence = ratio_report(range_or(60));
      IdentityReport r;
      r.identity_id = "ratio";
      r.range_first = 1;
      r.range_last = convergence->samples.back().n;
      for (const RatioSample& s : convergence->samples)
        if (s.ratio < 0 || s.ratio > 1) r.record(s.n, s.odd_total, s.union_total);
      if (!(convergence->final_gap < *threshold)) {
        const RatioSample& last = convergence->samples.back();
        r.record(last.n, last.odd_total, last.union_total);
      }
      reports.push_back(std::move(r));
    } else {
      throw UsageError("unknown identity id '" + id + "'");
    }
  };

  if (o.id == "all") {
    for (const std::string& id : kIdentityIds) run_id(id, true);
  } else {
    run_id(o.id, false);
  }

  const bool passed = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
  std::string text;
  if (o.format == "json") {
    ordered_json doc;
    doc["schema"] = kJsonSchemaVersion;
    doc["command"] = "verify";
    doc["passed"] = passed;
    auto list = ordered_json::array();
    for (const IdentityReport& r : reports) list.push_back(report_json(r));
    doc["reports"] = std::move(list);
    if (convergence) {
      const RatioSample& last = convergence->samples.back();
      doc["ratio"] = {{"n", last.n},
                      {"ratio", rational_string(last.ratio)},
                      {"ratio_decimal", last.ratio_decimal},
                      {"final_gap", rational_string(convergence->final_gap)},
                      {"final_gap_decimal", convergence->final_gap_decimal},
                      {"threshold", rational_string(*threshold)}};
    }
    text = doc.dump() + "\n";
  } else {
    for (const IdentityReport& r : reports) text += report_line(r);
    if (convergence) {
      const RatioSample& last = convergence->samples.back();
      text += "ratio r_" + std::to_string(last.n) + " = " + rational_string(last.ratio) + " ~ " +
              last.ratio_decimal + "\n";
      text += "gap 1 - r_" + std::to_string(last.n) + " = " + convergence->final_gap_decimal + " (threshold " +
              o.threshold + ")\n";
    }
  }
  emit(text, o.output, out);
  return passed ? kOk : kVerificationFailure;
}

struct DiscoverOptions {
  Index alpha = 1;
  Index beta = 1;
  Index probe = 0;
  CLI::Option* probe_opt = nullptr;
  Index expect_order = 0;
  CLI::Option* expect_opt = nullptr;
  std::string family;
  FamilyParams params;
  Index to = 40;
  std::string format = "table";
};

std::string_view status_name(DiscoveryStatus s) {
  switch (s) {
    case DiscoveryStatus::found: return "found";
    case DiscoveryStatus::non_integral: return "non-integral";
    case DiscoveryStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

int cmd_discover(const DiscoverOptions& o, std::ostream& out) {
  RecurrenceReport report;
  std::string subject;
  Index first_index = 0;
  if (o.family.empty()) {
    const Index probe = o.probe_opt->count() ? o.probe : 8 * (o.alpha + o.beta);
    report = discover_order(o.alpha, o.beta, probe);
    subject = "schreier-zeckendorf(alpha=" + std::to_string(o.alpha) + ",beta=" + std::to_string(o.beta) + ")";
    first_index = 2 * o.alpha + o.beta;
  } else {
    FamilyParams params = o.params;
    params.alpha = o.alpha;
    params.beta = o.beta;
    const SequenceWindow w = build_window(o.family, params, std::nullopt, o.to);
    if (w.size() < 2) throw UsageError("discovery needs at least two terms");
    report = berlekamp_massey(w);
    subject = w.id;
    first_index = w.offset;
  }

  std::vector<std::string> coeffs;
  for (const Rational& q : report.rational_coeffs) coeffs.push_back(rational_string(q));

  std::string text;
  if (o.format == "json") {
    ordered_json doc;
    doc["schema"] = kJsonSchemaVersion;
    doc["command"] = "discover";
    doc["family"] = subject;
    doc["from_index"] = first_index;
    doc["status"] = status_name(report.status);
    doc["order"] = report.order;
    doc["coefficients"] = coeffs;
    doc["verified_upto"] = report.verified_upto;
    doc["minimal"] = report.minimal;
    text = doc.dump() + "\n";
  } else {
    std::ostringstream os;
    os << "family " << subject << " from index " << first_index << '\n';
    os << "status " << status_name(report.status) << '\n';
    if (report.status != DiscoveryStatus::inconclusive || report.order > 0) {
      os << "order " << report.order << '\n';
      os << "coefficients";
      for (const std::string& c : coeffs) os << ' ' << c;
      os << '\n';
    }
    os << "verified_upto " << report.verified_upto << '\n';
    os << "minimal " << (report.minimal ? "true" : "false") << '\n';
    text = os.str();
  }
  out << text;

  if (report.status == DiscoveryStatus::inconclusive) return kInconclusive;
  if (o.expect_opt->count() && static_cast<Index>(report.order) != o.expect_order) return kVerificationFailure;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_limit) {
  CLI::App app{"Exact counts, sequences, identity checks and recurrence discovery for gap-constrained subsets",
               "seqforge"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file; explicit flags take precedence");

  // count
  auto* count_cmd = app.add_subcommand("count", "Count subsets of {1..n} matching a condition");
  Index count_n = 0;
  std::string count_engine = "auto";
  std::string count_format = "table";
  std::string count_output;
  ConditionFlags count_flags;
  Limits count_limits;
  count_cmd->add_option("--n", count_n, "Ambient set {1..n}")->required()->check(CLI::NonNegativeNumber);
  count_flags.attach(count_cmd);
  count_limits.attach(count_cmd);
  count_cmd->add_option("--engine", count_engine, "auto | oracle | recurrence")
      ->check(CLI::IsMember({"auto", "oracle", "recurrence"}))
      ->capture_default_str();
  count_cmd->add_option("--format", count_format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  count_cmd->add_option("--output", count_output, "Write to a file instead of standard output");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "List matching subsets of {1..n}");
  Index enum_n = 0;
  std::string enum_format = "table";
  ConditionFlags enum_flags;
  Limits enum_limits;
  enum_cmd->add_option("--n", enum_n, "Ambient set {1..n}")->required()->check(CLI::NonNegativeNumber);
  enum_flags.attach(enum_cmd);
  enum_limits.attach(enum_cmd);
  enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  // seq
  auto* seq_cmd = app.add_subcommand("seq", "Emit a window of a sequence family");
  std::string seq_family;
  FamilyParams seq_params;
  Index seq_from = 0;
  Index seq_to = 0;
  std::string seq_format = "table";
  std::string seq_output;
  seq_cmd->add_option("--family", seq_family, "Sequence family")->required();
  seq_cmd->add_option("--n", seq_params.n, "Order of genfib/genK/genH")->capture_default_str();
  seq_cmd->add_option("--alpha", seq_params.alpha)->capture_default_str();
  seq_cmd->add_option("--beta", seq_params.beta)->capture_default_str();
  seq_cmd->add_option("--k", seq_params.k, "Minimum size for minsize-oddgap")->capture_default_str();
  auto* seq_from_opt = seq_cmd->add_option("--from", seq_from, "First index (default: family offset)");
  seq_cmd->add_option("--to", seq_to, "Last index")->required();
  seq_cmd->add_option("--format", seq_format)
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}))
      ->capture_default_str();
  seq_cmd->add_option("--output", seq_output, "Write to a file instead of standard output");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check identities over a range");
  VerifyOptions vo;
  verify_cmd->add_option("--id", vo.id, "Identity id or 'all'")->required();
  vo.to_opt = verify_cmd->add_option("--to", vo.to, "Last index of the checked range")->check(CLI::NonNegativeNumber);
  vo.n_opt = verify_cmd->add_option("--n", vo.n, "Order for gen-sum/gen-shift (default: sweep 2..8)");
  vo.alpha_opt = verify_cmd->add_option("--alpha", vo.alpha)->check(CLI::PositiveNumber);
  vo.beta_opt = verify_cmd->add_option("--beta", vo.beta)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threshold", vo.threshold, "Bound on 1 - r_n for the ratio check")->capture_default_str();
  verify_cmd->add_option("--format", vo.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  verify_cmd->add_option("--output", vo.output, "Write to a file instead of standard output");
  vo.limits.attach(verify_cmd);

  // discover
  auto* discover_cmd = app.add_subcommand("discover", "Find the minimal linear recurrence of a sequence");
  DiscoverOptions dopt;
  discover_cmd->add_option("--alpha", dopt.alpha)->check(CLI::PositiveNumber)->capture_default_str();
  discover_cmd->add_option("--beta", dopt.beta)->check(CLI::PositiveNumber)->capture_default_str();
  dopt.probe_opt = discover_cmd->add_option("--probe", dopt.probe, "Number of tail terms (default 8(alpha+beta))")
                       ->check(CLI::NonNegativeNumber);
  dopt.expect_opt = discover_cmd->add_option("--expect-order", dopt.expect_order, "Exit 1 if the order differs");
  discover_cmd->add_option("--family", dopt.family, "Run on a sequence family instead");
  discover_cmd->add_option("--n", dopt.params.n)->capture_default_str();
  discover_cmd->add_option("--k", dopt.params.k)->capture_default_str();
  discover_cmd->add_option("--to", dopt.to, "Last index when --family is given")->capture_default_str();
  discover_cmd->add_option("--format", dopt.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (count_cmd->parsed()) {
      const Condition c = count_flags.build();
      const int limit = count_limits.resolve(env_limit);
      BigCount result;
      if (count_engine == "recurrence" || (count_engine == "auto" && count_n > limit)) {
        if (c.forced_max && *c.forced_max > count_n) throw UsageError("--forced-max exceeds --n");
        const auto value = count_by_recurrence(count_n, c);
        if (!value) {
          err << "error: no recurrence engine covers this condition; n = " << count_n
              << " exceeds the enumeration limit " << limit << " or --engine=recurrence was forced\n";
          return kResourceLimit;
        }
        result = *value;
      } else {
        result = count_subsets(count_n, c, limit);
      }
      std::string text;
      if (count_format == "json") {
        ordered_json doc;
        doc["schema"] = kJsonSchemaVersion;
        doc["command"] = "count";
        doc["n"] = count_n;
        doc["count"] = to_decimal_string(result);
        text = doc.dump() + "\n";
      } else {
        text = to_decimal_string(result) + "\n";
      }
      emit(text, count_output, out);
      return kOk;
    }
    if (enum_cmd->parsed()) {
      const Condition c = enum_flags.build();
      const std::vector<Subset> subsets = enumerate_subsets(enum_n, c, enum_limits.resolve(env_limit));
      if (enum_format == "json") {
        ordered_json doc;
        doc["schema"] = kJsonSchemaVersion;
        doc["command"] = "enumerate";
        doc["n"] = enum_n;
        doc["count"] = subsets.size();
        auto list = ordered_json::array();
        for (const Subset& s : subsets) list.push_back(std::vector<Index>(s.elements().begin(), s.elements().end()));
        doc["subsets"] = std::move(list);
        out << doc.dump() << '\n';
      } else {
        out << render_subset_list(subsets);
      }
      return kOk;
    }
    if (seq_cmd->parsed()) {
      std::optional<Index> from;
      if (seq_from_opt->count()) from = seq_from;
      const SequenceWindow w = build_window(seq_family, seq_params, from, seq_to);
      emit(render(w, parse_output_format(seq_format)), seq_output, out);
      return kOk;
    }
    if (verify_cmd->parsed()) return cmd_verify(vo, env_limit, out);
    if (discover_cmd->parsed()) return cmd_discover(dopt, out);
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace seqforge::cli
