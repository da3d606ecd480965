#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zimin/bounds.hpp"
#include "zimin/inequalities.hpp"
#include "zimin/lab_search.hpp"
#include "zimin/monte_carlo.hpp"
#include "zimin/series.hpp"
#include "zimin/words.hpp"

namespace zimin::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "zimin-bounds";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kAllHold = 0, kClaimFails = 1, kInconclusive = 2, kUsageError = 3 };

// Defaults, overridable by a JSON config file and then by flags.
struct Settings {
  long precision_bits = kDefaultPrecision;
  std::uint32_t a_max = 8;
  std::uint32_t partial_product_J = kDefaultPartialProductJ;
  std::uint64_t mc_samples = 100000;

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open config file: " + path);
    Json j = Json::parse(in);
    static const char* known[] = {"precision_bits", "a_max", "partial_product_J", "mc_samples"};
    for (auto it = j.begin(); it != j.end(); ++it)
      if (std::find_if(std::begin(known), std::end(known),
                       [&](const char* k) { return it.key() == k; }) == std::end(known))
        throw ContractError("unknown config key: " + it.key());
    if (j.contains("precision_bits")) precision_bits = j["precision_bits"].get<long>();
    if (j.contains("a_max")) a_max = j["a_max"].get<std::uint32_t>();
    if (j.contains("partial_product_J")) partial_product_J = j["partial_product_J"].get<std::uint32_t>();
    if (j.contains("mc_samples")) mc_samples = j["mc_samples"].get<std::uint64_t>();
  }
};

struct Range {
  std::uint32_t lo = 0, hi = 0;
};

// "4..8" or a single value "5".
inline Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto to_u32 = [&](const std::string& s) {
    detail::require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
                    "malformed range: " + text);
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  if (dots == std::string::npos) {
    auto v = to_u32(text);
    return {v, v};
  }
  Range r{to_u32(text.substr(0, dots)), to_u32(text.substr(dots + 2))};
  detail::require(r.lo <= r.hi, "empty range: " + text);
  return r;
}

// One command's output before formatting.
struct Report {
  Json result = Json::object();
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::optional<std::uint64_t> seed;
  std::optional<long> precision;
  Json policy;  // null when not applicable
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text;

  void verdict(std::string name, Verdict v) { verdicts.emplace_back(std::move(name), v); }

  int exit_code() const {
    Verdict all = Verdict::Holds;
    for (const auto& [name, v] : verdicts) all = combine(all, v);
    if (all == Verdict::Fails) return kClaimFails;
    if (all == Verdict::Inconclusive) return kInconclusive;
    return kAllHold;
  }
};

class App {
 public:
  // argv without the program name.
  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
      return dispatch(args, out, err);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return kAllHold;
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const ContractError& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const UnsupportedRegime& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const nlohmann::json::exception& e) {
      err << "error: config: " << e.what() << "\n";
      return kUsageError;
    }
  }

 private:
  // ---- rendering helpers --------------------------------------------------

  unsigned digits_ = 30;

  Json rational_json(const Rational& q) const {
    return Json{{"exact", to_fraction_string(q)}, {"decimal", to_decimal(q, digits_)}};
  }

  std::string lo_str(const Interval& x) const { return to_decimal(x.lo(), digits_, DecimalRounding::Floor); }
  std::string hi_str(const Interval& x) const { return to_decimal(x.hi(), digits_, DecimalRounding::Ceil); }

  Json interval_json(const Interval& x) const {
    return Json{{"lo", lo_str(x)}, {"hi", hi_str(x)}, {"precision_bits", x.prec()}};
  }

  static Json policy_json(const TruncationPolicy& p) {
    Json j{{"a_max", p.a_max}};
    if (p.target_width) {
      j["target_width"] = to_fraction_string(*p.target_width);
      j["a_max_cap"] = p.a_max_cap;
    }
    return j;
  }

  void emit(const Report& r, const std::string& format, const std::vector<std::string>& args,
            std::ostream& out) const {
    if (format == "json") {
      Json env;
      env["tool"] = kToolName;
      env["version"] = kToolVersion;
      env["command"] = args;
      env["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
      env["precision_bits"] = r.precision ? Json(*r.precision) : Json(nullptr);
      env["policy"] = r.policy;
      env["result"] = r.result;
      Json v = Json::object();
      for (const auto& [name, verdict] : r.verdicts) v[name] = std::string(to_string(verdict));
      env["verdicts"] = v;
      env["exit_code"] = r.exit_code();
      out << env.dump(2) << "\n";
    } else if (format == "csv") {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << "\n";
      };
      line(r.csv_header);
      for (const auto& row : r.csv_rows) line(row);
    } else {
      for (const auto& l : r.text) out << l << "\n";
      for (const auto& [name, verdict] : r.verdicts) out << name << ": " << to_string(verdict) << "\n";
    }
  }

  // ---- commands -----------------------------------------------------------

  Report eval_t(std::uint32_t m, std::uint32_t k, std::uint32_t ell) const {
    detail::require(m >= 1 && k >= 1 && ell >= 1, "eval-t: m, k, ell must be positive");
    Rational t = T_exact(m, k, ell);
    Report r;
    r.result = {{"m", m}, {"k", k}, {"ell", ell}, {"T", rational_json(t)}};
    r.csv_header = {"m", "k", "ell", "T_exact", "T_decimal"};
    r.csv_rows.push_back({std::to_string(m), std::to_string(k), std::to_string(ell),
                          to_fraction_string(t), to_decimal(t, digits_)});
    r.text = {to_fraction_string(t), to_decimal(t, digits_)};
    return r;
  }

  Report eval_s(std::uint32_t m, std::uint32_t k, const TruncationPolicy& policy, long prec) const {
    SeriesResult s = S_enclosure(m, k, policy, prec);
    Report r;
    r.precision = prec;
    r.policy = policy_json(s.policy);
    r.result = {{"m", m},
                {"k", k},
                {"S", interval_json(s.value)},
                {"partial_sum", rational_json(s.partial_sum)},
                {"terms_summed", s.terms_summed},
                {"tail_bound_hi", hi_str(s.tail_bound)},
                {"target_met", s.target_met}};
    Rational floor_value = pow_int(Rational(m), 1 - static_cast<long>(k));
    r.verdict("S.lo >= m^(1-k)", verdict_ge(compare(Interval(s.partial_sum, prec), floor_value)));
    Interval p_bound = P_enclosure(m, k - 1, prec) / pow_int(Rational(m), static_cast<long>(k) - 1);
    r.verdict("S.hi <= P(m,k-1)/m^(k-1)", verdict_le(compare(s.value, p_bound)));
    r.csv_header = {"m", "k", "S_lo", "S_hi", "terms_summed", "a_max"};
    r.csv_rows.push_back({std::to_string(m), std::to_string(k), lo_str(s.value), hi_str(s.value),
                          std::to_string(s.terms_summed), std::to_string(s.policy.a_max)});
    r.text = {"S(" + std::to_string(m) + "," + std::to_string(k) + ") in [" + lo_str(s.value) + ", " +
              hi_str(s.value) + "]"};
    return r;
  }

  Report eval_k(std::uint32_t m, std::uint32_t i, const TruncationPolicy& policy, long prec) const {
    Interval K = K_enclosure(m, i, policy, prec);
    Report r;
    r.precision = prec;
    r.policy = policy_json(policy);
    r.result = {{"m", m}, {"i", i}, {"K", interval_json(K)}};
    r.csv_header = {"m", "i", "K_lo", "K_hi"};
    r.csv_rows.push_back({std::to_string(m), std::to_string(i), lo_str(K), hi_str(K)});
    r.text = {"K(" + std::to_string(m) + "," + std::to_string(i) + ") in [" + lo_str(K) + ", " + hi_str(K) + "]"};
    return r;
  }

  Report eval_p(std::uint32_t m, std::uint32_t k, long prec) const {
    Interval P = P_enclosure(m, k, prec);
    Report r;
    r.precision = prec;
    r.result = {{"m", m}, {"k", k}, {"P", interval_json(P)}};
    r.verdict("P >= 1", verdict_ge(compare(P, Rational(1))));
    r.csv_header = {"m", "k", "P_lo", "P_hi"};
    r.csv_rows.push_back({std::to_string(m), std::to_string(k), lo_str(P), hi_str(P)});
    r.text = {"P(" + std::to_string(m) + "," + std::to_string(k) + ") in [" + lo_str(P) + ", " + hi_str(P) + "]"};
    return r;
  }

  Report p_inf(std::uint32_t m, std::uint32_t J, long prec) const {
    PInfReport p = P_inf_upper(m, J, prec);
    RegimeSteps steps = regime_steps(m, prec);
    RegimeConstantCheck constant =
        p.regime == PRegime::Large ? large_regime_constant(prec) : small_regime_constant(prec);
    Report r;
    r.precision = p.precision;
    r.policy = Json{{"partial_product_J", J}};
    r.result = {{"m", m},
                {"regime", to_string(p.regime)},
                {"partial_product", interval_json(p.partial_product)},
                {"log_tail", interval_json(p.log_tail)},
                {"upper_bound", hi_str(p.upper)},
                {"regime_constant", interval_json(constant.value)},
                {"ln42", interval_json(constant.ln42)}};
    r.verdict("P_inf <= 42", p.at_most_42);
    if (p.regime == PRegime::Large) {
      r.verdict("P(m,1) <= 5", steps.head);
      r.verdict("4/(m(m-1)) <= 2/21", steps.tail);
      r.verdict("ln 5 + 2/21 <= ln 42", constant.verdict);
    } else {
      r.verdict("prod_{j<=4} P(m,2^j-1) <= 41", steps.head);
      r.verdict("5m lambda^31/(1-lambda) <= 30*3^31/4^30", steps.tail);
      r.verdict("ln 41 + 30*3^31/4^30 <= ln 42", constant.verdict);
    }
    r.csv_header = {"m", "regime", "partial_product_hi", "P_inf_upper", "verdict"};
    r.csv_rows.push_back({std::to_string(m), to_string(p.regime), hi_str(p.partial_product), hi_str(p.upper),
                          std::string(to_string(p.at_most_42))});
    r.text = {"P_inf(" + std::to_string(m) + ") <= " + hi_str(p.upper) + "  [" + to_string(p.regime) + "]"};
    return r;
  }

  Json sandwich_json(const SandwichReport& s) const {
    return Json{{"m", s.m},
                {"i", s.i},
                {"K", interval_json(s.K)},
                {"upper_envelope", rational_json(s.upper_envelope)},
                {"lower_envelope", rational_json(s.lower_envelope)},
                {"upper_side", std::string(to_string(s.upper_side))},
                {"lower_side", std::string(to_string(s.lower_side))},
                {"precision_bits", s.precision}};
  }

  void add_sandwich_rows(Report& r, const std::vector<SandwichReport>& cells) const {
    r.csv_header = {"m", "i", "K_lo", "K_hi", "lower_envelope", "upper_envelope", "lower_side", "upper_side"};
    Json arr = Json::array();
    long prec = 0;
    for (const auto& s : cells) {
      arr.push_back(sandwich_json(s));
      std::string cell = "(" + std::to_string(s.m) + "," + std::to_string(s.i) + ")";
      r.verdict("K" + cell + " <= 2 m^(2^i)/m^(i+1)", s.upper_side);
      r.verdict("K" + cell + " >= (1/21) m^(2^i)/m^(i+1)", s.lower_side);
      r.csv_rows.push_back({std::to_string(s.m), std::to_string(s.i), lo_str(s.K), hi_str(s.K),
                            to_decimal(s.lower_envelope, digits_), to_decimal(s.upper_envelope, digits_),
                            std::string(to_string(s.lower_side)), std::string(to_string(s.upper_side))});
      r.text.push_back("K" + cell + " in [" + lo_str(s.K) + ", " + hi_str(s.K) + "]  lower " +
                       std::string(to_string(s.lower_side)) + ", upper " + std::string(to_string(s.upper_side)));
      prec = std::max<long>(prec, s.precision);
    }
    r.result = {{"cells", arr}};
    r.precision = prec;
  }

  Report sandwich(std::uint32_t m, std::uint32_t i, const TruncationPolicy& policy, long prec) const {
    Report r;
    add_sandwich_rows(r, {sandwich_check(m, i, policy, prec)});
    r.policy = policy_json(policy);
    return r;
  }

  Report sandwich_grid_cmd(Range ms, Range is, const TruncationPolicy& policy, long prec) const {
    Report r;
    add_sandwich_rows(r, sandwich_grid(ms.lo, ms.hi, is.lo, is.hi, policy, prec));
    r.policy = policy_json(policy);
    return r;
  }

  Report lab_table(Range ms, Range is, const TruncationPolicy& policy, long prec) const {
    auto rows = lab_bound_table(ms.lo, ms.hi, is.lo, is.hi, policy, prec);
    Report r;
    r.precision = prec;
    r.policy = policy_json(policy);
    Json arr = Json::array();
    r.csv_header = {"m", "i", "K_lo", "K_hi", "sqrt_K_lo", "a_max"};
    bool monotone = true;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const auto& row = rows[t];
      if (t > 0 && rows[t - 1].m == row.m) monotone = monotone && row.K.lo() > rows[t - 1].K.lo();
      arr.push_back(Json{{"m", row.m},
                         {"i", row.i},
                         {"K", interval_json(row.K)},
                         {"sqrt_K_lo", lo_str(row.sqrt_K_lo)},
                         {"a_max", row.a_max}});
      r.csv_rows.push_back({std::to_string(row.m), std::to_string(row.i), lo_str(row.K), hi_str(row.K),
                            lo_str(row.sqrt_K_lo), std::to_string(row.a_max)});
      r.text.push_back("m=" + std::to_string(row.m) + " i=" + std::to_string(row.i) + "  K in [" + lo_str(row.K) +
                       ", " + hi_str(row.K) + "]  sqrt(K.lo) >= " + lo_str(row.sqrt_K_lo));
    }
    r.result = {{"rows", arr},
                {"note", "sqrt(K.lo) omits the (1 + eps_m(i)) factor of the asymptotic L_ab lower bound; "
                         "eps_m(i) has no explicit form and tends to 0"}};
    r.text.push_back("note: sqrt(K.lo) omits the (1 + eps_m(i)) factor, which tends to 1");
    r.verdict("K.lo increasing in i", monotone ? Verdict::Holds : Verdict::Fails);
    return r;
  }

  Report verify(const std::string& grid_name, std::uint64_t seed) const {
    detail::require(grid_name == "default" || grid_name == "dense", "unknown grid: " + grid_name);
    InequalityGrid grid = grid_name == "dense" ? InequalityGrid::dense() : InequalityGrid::standard();
    auto entries = verify_inequalities(grid, seed);
    Report r;
    r.seed = seed;
    r.precision = kDefaultPrecision;
    r.policy = Json{{"grid", grid_name}};
    Json arr = Json::array();
    r.csv_header = {"check", "cases", "verdict", "first_failure"};
    for (const auto& e : entries) {
      arr.push_back(Json{{"check", e.name},
                         {"cases", e.cases},
                         {"verdict", std::string(to_string(e.verdict))},
                         {"first_failure", e.first_failure}});
      r.csv_rows.push_back({e.name, std::to_string(e.cases), std::string(to_string(e.verdict)), e.first_failure});
      r.verdict(e.name, e.verdict);
    }
    r.result = {{"manifest", arr}, {"generator", kSampleEngineName}};
    r.text.push_back(std::to_string(entries.size()) + " checks on the " + grid_name + " grid");
    return r;
  }

  static Word parse_word(const std::string& text) {
    if (text.find(',') != std::string::npos) return Word::from_csv(text);
    return Word::from_text(text);
  }

  static Pattern parse_pattern(const std::string& text) {
    if (text.find(',') != std::string::npos) {
      Word w = Word::from_csv(text);
      std::vector<Variable> vars;
      for (auto l : w.letters()) vars.push_back(l);
      return Pattern(std::move(vars));
    }
    return Pattern::from_text(text);
  }

  Report check_word(const std::string& word_text, const std::string& pattern_text) const {
    Word w = parse_word(word_text);
    Pattern p = parse_pattern(pattern_text);
    auto witness = contains_abelian(w, p);
    Report r;
    r.result = {{"word", w.to_string()}, {"pattern", p.to_string()}, {"contains", witness.has_value()}};
    r.csv_header = {"word", "pattern", "contains", "start", "witness"};
    if (witness) {
      Json segs = Json::array();
      for (const auto& s : witness->segments) segs.push_back(s.to_string());
      r.result["witness"] = Json{{"start", witness->start}, {"segments", segs}};
      r.text = {"contains: true", "witness: " + witness->to_string()};
      r.csv_rows.push_back({word_text, pattern_text, "true", std::to_string(witness->start), witness->to_string()});
    } else {
      r.result["witness"] = nullptr;
      r.text = {"contains: false"};
      r.csv_rows.push_back({word_text, pattern_text, "false", "", ""});
    }
    return r;
  }

  Report zimin_cmd(std::uint32_t i) const {
    Pattern z = zimin(i);
    Report r;
    Json symbols = z.symbols();
    r.result = {{"i", i}, {"length", z.size()}, {"symbols", symbols}, {"pattern", z.to_string()}};
    r.csv_header = {"i", "length", "pattern"};
    r.csv_rows.push_back({std::to_string(i), std::to_string(z.size()), z.to_string()});
    r.text = {z.to_string()};
    return r;
  }

  Report lab_search(std::uint32_t m, std::uint32_t i, std::uint64_t cap) const {
    LabResult l = lab_bruteforce(m, i, cap);
    Report r;
    r.policy = Json{{"cap", cap}};
    r.result = {{"m", m},
                {"i", i},
                {"exceeds_cap", l.exceeds_cap},
                {"L", l.exceeds_cap ? Json(nullptr) : Json(l.length)},
                {"longest_avoider", l.longest_avoider.to_string()},
                {"nodes_visited", l.nodes_visited}};
    r.csv_header = {"m", "i", "L", "exceeds_cap", "longest_avoider"};
    r.csv_rows.push_back({std::to_string(m), std::to_string(i), l.exceeds_cap ? "" : std::to_string(l.length),
                          l.exceeds_cap ? "true" : "false", l.longest_avoider.to_string()});
    r.text = {l.exceeds_cap ? "L > " + std::to_string(cap) + " (avoiding word of length cap found)"
                            : "L = " + std::to_string(l.length),
              "longest avoider: " + l.longest_avoider.to_string()};
    return r;
  }

  Report mc_t(std::uint32_t m, std::uint32_t k, std::uint32_t ell, std::uint64_t samples, std::uint64_t seed) const {
    McEstimate e = mc_estimate_T(m, k, ell, samples, seed);
    Rational exact = T_exact(m, k, ell);
    std::ostringstream est, se;
    est.precision(17);
    se.precision(17);
    est << e.estimate;
    se << e.std_error;
    Report r;
    r.seed = seed;
    r.policy = Json{{"samples", samples}, {"generator", e.generator}};
    r.result = {{"m", m},          {"k", k},         {"ell", ell},
                {"hits", e.hits},  {"samples", e.samples},
                {"estimate", est.str()}, {"std_error", se.str()},
                {"T_exact", rational_json(exact)}};
    r.csv_header = {"m", "k", "ell", "samples", "seed", "estimate", "std_error", "T_exact"};
    r.csv_rows.push_back({std::to_string(m), std::to_string(k), std::to_string(ell), std::to_string(samples),
                          std::to_string(seed), est.str(), se.str(), to_decimal(exact, digits_)});
    r.text = {"estimate " + est.str() + " +- " + se.str(), "exact    " + to_decimal(exact, digits_)};
    return r;
  }

  // ---- argument parsing ---------------------------------------------------

  int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified evaluation of abelian Ramsey length lower bounds", kToolName};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string format = "json";
    std::string config_path;
    std::string out_path;
    std::optional<long> precision_flag;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--config", config_path, "JSON config (precision_bits, a_max, partial_product_J, mc_samples)");
    app.add_option("--precision", precision_flag, "Starting working precision in bits");
    app.add_option("--digits", digits_, "Decimal places in rendered numbers");
    app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

    std::uint32_t m = 0, k = 0, ell = 0, i = 0;
    std::optional<std::uint32_t> a_max_flag, J_flag;
    std::optional<std::string> width_flag;
    std::optional<std::uint64_t> samples_flag;
    std::uint64_t seed = 1, cap = 64;
    std::string m_range = "4..8", i_range = "1..5", table_i_range = "1..6", grid = "default";
    std::string word, pattern;

    auto truncation_opts = [&](CLI::App* sub) {
      auto* a = sub->add_option("--a-max", a_max_flag, "Exact terms cover ell <= (a_max+1) m");
      auto* w = sub->add_option("--width", width_flag, "Target enclosure width (adaptive a_max)");
      a->excludes(w);
    };

    auto* t_cmd = app.add_subcommand("eval-t", "Exact T(m,k,ell)");
    t_cmd->add_option("m", m)->required();
    t_cmd->add_option("k", k)->required();
    t_cmd->add_option("ell", ell)->required();

    auto* s_cmd = app.add_subcommand("eval-s", "Certified enclosure of S(m,k)");
    s_cmd->add_option("m", m)->required();
    s_cmd->add_option("k", k)->required();
    truncation_opts(s_cmd);

    auto* k_cmd = app.add_subcommand("eval-k", "Certified enclosure of K(m,i)");
    k_cmd->add_option("m", m)->required();
    k_cmd->add_option("i", i)->required();
    truncation_opts(k_cmd);

    auto* p_cmd = app.add_subcommand("eval-p", "Certified enclosure of P(m,k)");
    p_cmd->add_option("m", m)->required();
    p_cmd->add_option("k", k)->required();

    auto* pinf_cmd = app.add_subcommand("p-inf", "Certified upper bound on P_inf(m)");
    pinf_cmd->add_option("m", m)->required();
    pinf_cmd->add_option("--J", J_flag, "Number of exactly enclosed factors");

    auto* sw_cmd = app.add_subcommand("sandwich", "Check both envelopes of K(m,i)");
    sw_cmd->add_option("m", m)->required();
    sw_cmd->add_option("i", i)->required();
    truncation_opts(sw_cmd);

    auto* grid_cmd = app.add_subcommand("sandwich-grid", "Sandwich check over a grid");
    grid_cmd->add_option("--m", m_range, "m range, e.g. 4..8");
    grid_cmd->add_option("--i", i_range, "i range, e.g. 1..5");
    truncation_opts(grid_cmd);

    auto* table_cmd = app.add_subcommand("lab-table", "K enclosures and sqrt(K.lo) table");
    table_cmd->add_option("--m", m_range, "m range");
    table_cmd->add_option("--i", table_i_range, "i range");
    truncation_opts(table_cmd);

    auto* verify_cmd = app.add_subcommand("verify-inequalities", "Certify the auxiliary inequalities on a grid");
    verify_cmd->add_option("--grid", grid, "default or dense")->check(CLI::IsMember({"default", "dense"}));
    verify_cmd->add_option("--seed", seed, "Seed for random part vectors");

    auto* word_cmd = app.add_subcommand("check-word", "Abelian containment of PATTERN in WORD");
    word_cmd->add_option("word", word)->required();
    word_cmd->add_option("pattern", pattern)->required();

    auto* zimin_cmd_ = app.add_subcommand("zimin", "Print the Zimin pattern Z_i");
    zimin_cmd_->add_option("i", i)->required();

    auto* lab_cmd = app.add_subcommand("lab-search", "Brute-force L_ab(m, Z_i)");
    lab_cmd->add_option("m", m)->required();
    lab_cmd->add_option("i", i)->required();
    lab_cmd->add_option("--cap", cap, "Give up once an avoiding word of this length exists");

    auto* mc_cmd = app.add_subcommand("mc-t", "Monte-Carlo estimate of T(m,k,ell)");
    mc_cmd->add_option("m", m)->required();
    mc_cmd->add_option("k", k)->required();
    mc_cmd->add_option("ell", ell)->required();
    mc_cmd->add_option("--samples", samples_flag, "Number of samples");
    mc_cmd->add_option("--seed", seed, "Generator seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kAllHold;
    } catch (const CLI::CallForVersion&) {
      out << kToolVersion << "\n";
      return kAllHold;
    }

    Settings settings;
    if (!config_path.empty()) settings.load(config_path);
    if (precision_flag) settings.precision_bits = *precision_flag;
    if (a_max_flag) settings.a_max = *a_max_flag;
    if (J_flag) settings.partial_product_J = *J_flag;
    if (samples_flag) settings.mc_samples = *samples_flag;
    detail::require(settings.precision_bits >= 16 && settings.precision_bits <= kPrecisionCap,
                    "precision must lie in 16..4096 bits");

    TruncationPolicy policy;
    policy.a_max = settings.a_max;
    if (width_flag) policy.target_width = parse_rational(*width_flag);
    const long prec = settings.precision_bits;

    Report report;
    if (t_cmd->parsed()) report = eval_t(m, k, ell);
    else if (s_cmd->parsed()) report = eval_s(m, k, policy, prec);
    else if (k_cmd->parsed()) report = eval_k(m, i, policy, prec);
    else if (p_cmd->parsed()) report = eval_p(m, k, prec);
    else if (pinf_cmd->parsed()) report = p_inf(m, settings.partial_product_J, prec);
    else if (sw_cmd->parsed()) report = sandwich(m, i, policy, prec);
    else if (grid_cmd->parsed()) report = sandwich_grid_cmd(parse_range(m_range), parse_range(i_range), policy, prec);
    else if (table_cmd->parsed())
      report = lab_table(parse_range(m_range), parse_range(table_i_range), policy, prec);
    else if (verify_cmd->parsed()) report = verify(grid, seed);
    else if (word_cmd->parsed()) report = check_word(word, pattern);
    else if (zimin_cmd_->parsed()) report = zimin_cmd(i);
    else if (lab_cmd->parsed()) report = lab_search(m, i, cap);
    else if (mc_cmd->parsed()) report = mc_t(m, k, ell, settings.mc_samples, seed);

    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) throw ContractError("cannot open output file: " + out_path);
      emit(report, format, args, file);
    } else {
      emit(report, format, args, out);
    }
    (void)err;
    return report.exit_code();
  }
};

}  // namespace zimin::cli
