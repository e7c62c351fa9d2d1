#include "egypt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "egypt/bounds.hpp"
#include "egypt/expander.hpp"
#include "egypt/verifier.hpp"

namespace egypt {

namespace {

using nlohmann::json;

SequenceId parse_sequence(const std::string& name) {
  auto id = sequence_from_name(name);
  if (!id) {
    std::string known;
    for (SequenceId s : kAllSequences)
      known += std::string(" ") + descriptor(s).name + "/" + descriptor(s).oeis_id;
    raise(Errc::parse_error, "unknown sequence '" + name + "'; known:" + known);
  }
  return *id;
}

Rational parse_positive_rational(const std::string& text) {
  Rational q = parse_rational(text);
  if (q.sign() <= 0) raise(Errc::parse_error, "q must be positive, got " + text);
  return q;
}

json trace_to_json(const ExpansionTrace& t) {
  json j;
  j["prefix"] = json::array();
  for (const Int& p : t.prefix) j["prefix"].push_back(p.get_str());
  j["residual"] = t.residual.str();
  j["x"] = t.x.get_str();
  j["y"] = t.y.get_str();
  j["multiplier"] = t.multiplier.get_str();
  j["min_elem"] = t.min_elem.get_str();
  j["k"] = t.k;
  j["quotient"] = t.quotient.get_str();
  j["remainder"] = t.remainder.get_str();
  j["A"] = t.a_bits;
  j["B"] = t.b_bits;
  return j;
}

void print_trace_text(const ExpansionTrace& t, std::ostream& out) {
  out << "# prefix (" << t.prefix.size() << " members):";
  for (const Int& p : t.prefix) out << ' ' << p.get_str();
  out << "\n# residual: " << t.residual.str() << "\n";
  if (t.short_circuited()) {
    out << "# residual is zero; prefix alone is the expansion\n";
    return;
  }
  out << "# x: " << t.x.get_str() << "  y: " << t.y.get_str() << "  r: "
      << t.multiplier.get_str() << "  m: " << t.min_elem.get_str() << "  k: " << t.k << "\n";
  out << "# quotient: " << t.quotient.get_str() << "  remainder: " << t.remainder.get_str()
      << "\n# A:";
  for (auto e : t.a_bits) out << ' ' << e;
  out << "\n# B:";
  for (auto e : t.b_bits) out << ' ' << e;
  out << "\n";
}

std::vector<Int> read_denominators(const std::string& spec) {
  std::string text = spec;
  std::ifstream file(spec);
  if (file.good()) {
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  for (char& c : text)
    if (c == ',' || c == '\n' || c == '\t') c = ' ';
  std::istringstream in(text);
  std::vector<Int> dens;
  std::string tok;
  while (in >> tok) {
    Int d;
    if (mpz_set_str(d.get_mpz_t(), tok.c_str(), 10) != 0)
      raise(Errc::parse_error, "bad denominator '" + tok + "'");
    dens.push_back(d);
  }
  if (dens.empty()) raise(Errc::parse_error, "no denominators in '" + spec + "'");
  return dens;
}

struct CommandConfig {
  std::string seq_name;
  std::string q_text;
  std::string n_text;
  std::string denominators;
  std::string bfile_path;
  unsigned long limit = 10'000;
  unsigned long budget = 1'000'000;
  bool as_json = false;
  bool with_trace = false;
};

int cmd_expand(const CommandConfig& cfg, std::ostream& out) {
  SequenceId s = parse_sequence(cfg.seq_name);
  Rational q = parse_positive_rational(cfg.q_text);
  ExpandOptions opts;
  opts.prefix_budget = cfg.budget;
  auto [expansion, trace] = expand(s, q, opts);
  VerificationReport report = verify_expansion(s, q, expansion.denominators, opts.budget);
  if (cfg.as_json) {
    json j;
    j["sequence"] = descriptor(s).name;
    j["q"] = q.str();
    j["denominators"] = json::array();
    for (const Int& d : expansion.denominators) j["denominators"].push_back(d.get_str());
    j["verified"] = report.passed();
    if (cfg.with_trace) j["trace"] = trace_to_json(trace);
    out << j.dump() << "\n";
  } else {
    if (cfg.with_trace) print_trace_text(trace, out);
    for (const Int& d : expansion.denominators) out << d.get_str() << "\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_member(const CommandConfig& cfg, std::ostream& out) {
  SequenceId s = parse_sequence(cfg.seq_name);
  Rational n = parse_rational(cfg.n_text);
  if (n.den() != 1) raise(Errc::parse_error, "member expects an integer");
  out << (is_member(s, n.num()) ? "true" : "false") << "\n";
  return 0;
}

int cmd_multiplier(const CommandConfig& cfg, std::ostream& out) {
  SequenceId s = parse_sequence(cfg.seq_name);
  Rational n = parse_rational(cfg.n_text);
  if (n.den() != 1 || n.sign() <= 0) raise(Errc::parse_error, "multiplier expects a positive integer");
  out << productive_multiplier(s, n.num()).get_str() << "\n";
  return 0;
}

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  SequenceId s = parse_sequence(cfg.seq_name);
  for (const Int& m : enumerate_ascending(s, Int(cfg.limit))) out << m.get_str() << "\n";
  return 0;
}

int cmd_feasibility(const CommandConfig& cfg, std::ostream& out) {
  SequenceId s = parse_sequence(cfg.seq_name);
  Rational q = parse_positive_rational(cfg.q_text);
  FeasibilityVerdict v = feasibility(s, q);
  if (cfg.as_json) {
    json j;
    j["sequence"] = descriptor(s).name;
    j["q"] = q.str();
    j["verdict"] = verdict_name(v.verdict);
    if (v.certificate) j["certificate"] = v.certificate->str();
    out << j.dump() << "\n";
  } else {
    out << verdict_name(v.verdict) << "\n";
    if (v.certificate) out << "certificate: " << v.certificate->str() << "\n";
    out << v.diagnostics << "\n";
  }
  return v.verdict == FeasibilityVerdict::Kind::infeasible ? 1 : 0;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  SequenceId s = parse_sequence(cfg.seq_name);
  Rational q = parse_positive_rational(cfg.q_text);
  std::vector<Int> dens = read_denominators(cfg.denominators);
  VerificationReport report = verify_expansion(s, q, dens);
  if (cfg.as_json) {
    json j;
    j["sequence"] = descriptor(s).name;
    j["q"] = q.str();
    j["denominators"] = json::array();
    for (const Int& d : dens) j["denominators"].push_back(d.get_str());
    j["verified"] = report.passed();
    out << j.dump() << "\n";
  } else {
    out << (report.passed() ? "pass" : "fail") << "\n";
    for (const auto& [d, reason] : report.violations)
      out << d.get_str() << ": " << reason << "\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_compare_bfile(const CommandConfig& cfg, std::ostream& out) {
  SequenceId s = parse_sequence(cfg.seq_name);
  std::ifstream file(cfg.bfile_path);
  if (!file.good()) raise(Errc::parse_error, "cannot open b-file '" + cfg.bfile_path + "'");
  auto entries = parse_bfile(file);
  auto mismatch = compare_bfile(s, entries, Int(cfg.limit));
  if (mismatch) {
    out << "mismatch at index " << *mismatch << "\n";
    return 1;
  }
  out << "ok: listing agrees with " << descriptor(s).name << " up to the comparison cap\n";
  return 0;
}

int cmd_selftest(const CommandConfig& cfg, std::ostream& out) {
  bool all_ok = true;
  for (SequenceId s : kAllSequences) {
    unsigned long limit = std::min(cfg.limit, kOracleLimitCap);
    std::vector<Int> fast = enumerate_ascending(s, Int(limit));
    std::vector<Int> slow = oracle_members(s, limit);
    bool ok = fast == slow;
    all_ok = all_ok && ok;
    out << (ok ? "PASS" : "FAIL") << " oracle equivalence up to " << limit << ": "
        << descriptor(s).name << " (" << fast.size() << " members)\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Egyptian fractions with denominators from doubling-closed, productive sequences"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_seq = [&](CLI::App* cmd) {
    cmd->add_option("--seq", cfg.seq_name, "sequence name or OEIS id")->required();
  };

  CLI::App* expand_cmd = app.add_subcommand("expand", "expand Q as a sum of unit fractions");
  expand_cmd->add_option("q", cfg.q_text, "target rational, 'a' or 'a/b'")->required();
  add_seq(expand_cmd);
  expand_cmd->add_flag("--json", cfg.as_json, "machine-readable output");
  expand_cmd->add_flag("--trace", cfg.with_trace, "include the construction trace");
  expand_cmd->add_option("--budget", cfg.budget, "prefix member budget (default 10^6)");

  CLI::App* member_cmd = app.add_subcommand("member", "test sequence membership");
  member_cmd->add_option("n", cfg.n_text, "positive integer")->required();
  add_seq(member_cmd);

  CLI::App* mult_cmd = app.add_subcommand("multiplier", "productive multiplier r with r*n a member");
  mult_cmd->add_option("n", cfg.n_text, "positive integer")->required();
  add_seq(mult_cmd);

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list members ascending");
  add_seq(enum_cmd);
  enum_cmd->add_option("--limit", cfg.limit, "upper bound on members")->required();

  CLI::App* feas_cmd = app.add_subcommand("feasibility", "feasible / infeasible / unknown for Q");
  feas_cmd->add_option("q", cfg.q_text, "target rational")->required();
  add_seq(feas_cmd);
  feas_cmd->add_flag("--json", cfg.as_json, "machine-readable output");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check an expansion against Q");
  add_seq(verify_cmd);
  verify_cmd->add_option("--q", cfg.q_text, "target rational")->required();
  verify_cmd->add_option("--denominators", cfg.denominators, "file path or comma/space list")
      ->required();
  verify_cmd->add_flag("--json", cfg.as_json, "machine-readable output");

  CLI::App* bfile_cmd = app.add_subcommand("compare-bfile", "cross-check against an OEIS b-file");
  add_seq(bfile_cmd);
  bfile_cmd->add_option("--file", cfg.bfile_path, "b-file path")->required();
  bfile_cmd->add_option("--limit", cfg.limit, "value comparison cap (default 10^4)");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "oracle-equivalence suite");
  selftest_cmd->add_option("--limit", cfg.limit, "enumeration limit (default 10^4)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (expand_cmd->parsed()) return cmd_expand(cfg, out);
    if (member_cmd->parsed()) return cmd_member(cfg, out);
    if (mult_cmd->parsed()) return cmd_multiplier(cfg, out);
    if (enum_cmd->parsed()) return cmd_enumerate(cfg, out);
    if (feas_cmd->parsed()) return cmd_feasibility(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (bfile_cmd->parsed()) return cmd_compare_bfile(cfg, out);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg, out);
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::infeasible_target ? 1 : 2;
  }
  err << app.help();
  return 2;
}

}  // namespace egypt
