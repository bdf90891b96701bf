#include "cli_app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "symmono/errors.hpp"
#include "symmono/functionals.hpp"
#include "symmono/io.hpp"
#include "symmono/verify.hpp"

namespace symmono::cli {

namespace {

struct SpecOptions {
  std::string state;
  std::string alpha = "0.5";
  std::string theta = "uniform";
  std::string bipartitions = "elementary";
  std::string tree_shape = "balanced";
  int n_max = 4;
  double tol = 1e-9;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : tok.substr(b, e - b + 1));
  }
  return out;
}

double parse_double(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument(what + ": not a number: '" + tok + "'");
  }
  require(pos == tok.size(), what + ": not a number: '" + tok + "'");
  return v;
}

// nullopt stands for limit1.
std::vector<std::optional<double>> parse_alphas(const std::string& text) {
  std::vector<std::optional<double>> out;
  for (const auto& tok : split(text, ',')) {
    if (tok == "limit1") {
      out.emplace_back(std::nullopt);
      continue;
    }
    const double a = parse_double(tok, "--alpha");
    require(a > 0.0 && a < 1.0, "--alpha values must lie in (0,1) or be 'limit1'");
    out.emplace_back(a);
  }
  require(!out.empty(), "--alpha is empty");
  return out;
}

bool looks_like_file(const std::string& s) {
  return s.ends_with(".json") || std::filesystem::is_regular_file(s);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
}

std::vector<Bipartition> parse_bipartitions(const std::string& text, int parties) {
  require(parties >= 2, "functionals need at least two parties");
  if (text == "elementary") return Bipartition::elementary(parties);
  if (text == "all") return Bipartition::all(parties);
  std::vector<Bipartition> out;
  for (const auto& tok : split(text, ',')) {
    Bipartition b = Bipartition::parse(tok);
    require(b.parties() == parties, "bipartition " + tok + " does not match the state's " + std::to_string(parties) +
                                        " parties");
    require(std::find(out.begin(), out.end(), b) == out.end(), "duplicate bipartition " + tok);
    out.push_back(std::move(b));
  }
  require(!out.empty(), "--bipartitions is empty");
  return out;
}

FamilySpec build_spec(const SpecOptions& o, int parties) {
  if (looks_like_file(o.theta)) return family_from_tree(parse_tree(read_json_file(o.theta), parties));
  const std::vector<Bipartition> bs = parse_bipartitions(o.bipartitions, parties);
  std::vector<double> w;
  if (o.theta == "uniform") {
    w.assign(bs.size(), 1.0 / static_cast<double>(bs.size()));
  } else {
    for (const auto& tok : split(o.theta, ',')) w.push_back(parse_double(tok, "--theta"));
    require(w.size() == bs.size(), "--theta has " + std::to_string(w.size()) + " weights for " +
                                       std::to_string(bs.size()) + " bipartitions");
  }
  require(o.tree_shape == "balanced" || o.tree_shape == "left-comb", "--tree-shape is balanced or left-comb");
  const TreeShape shape = o.tree_shape == "balanced" ? TreeShape::kBalanced : TreeShape::kLeftComb;
  return FamilySpec::weighted(bs, w, shape);
}

void check_format(const std::string& f) {
  require(f == "json" || f == "csv" || f == "pretty", "--format is json, csv or pretty");
}

std::string alpha_text(const std::optional<double>& a) { return a ? format_number(*a) : "limit1"; }

std::string opt_number(const std::optional<double>& x) { return x ? format_number(*x) : ""; }

void add_spec_options(CLI::App* sub, SpecOptions& o, bool multi_alpha) {
  sub->add_option("--state", o.state, "file or name:params (ghz:L,K unit:R,K w:K random:D,.. product:D,.. schmidt:p,..)")
      ->required();
  sub->add_option("--alpha", o.alpha, multi_alpha ? "comma list in (0,1), or limit1" : "value in (0,1), or limit1")
      ->capture_default_str();
  sub->add_option("--theta", o.theta, "uniform, comma weights, or a tree file")->capture_default_str();
  sub->add_option("--bipartitions", o.bipartitions, "elementary, all, or a list like 1|23,2|13")->capture_default_str();
  sub->add_option("--tree-shape", o.tree_shape, "balanced or left-comb")->capture_default_str();
  sub->add_option("--n-max", o.n_max, "largest number of copies")->capture_default_str();
  sub->add_option("--tol", o.tol, "tolerance for violation flags")->capture_default_str();
  sub->add_option("--seed", o.seed, "seed for random states and filters")->capture_default_str();
  sub->add_option("--out", o.out, "write to this file instead of stdout");
}

// Writes to --out when given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    require(static_cast<bool>(file_), "cannot write '" + path + "'");
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_compute(const SpecOptions& o, int lower_budget, std::ostream& out) {
  check_format(o.format);
  const auto alphas = parse_alphas(o.alpha);
  const MultipartiteState psi = parse_state(o.state, o.seed);
  const FamilySpec spec = build_spec(o, psi.space().parties());
  UpperEstimator est({}, o.tol);
  std::vector<FunctionalReport> reports;
  for (const auto& a : alphas) reports.push_back(est.estimate(psi, spec, a, o.n_max));

  std::vector<std::pair<double, LowerFunctionalResult>> lowers;
  if (lower_budget >= 0) {
    const auto theta = spec.weighted_bipartitions();
    for (const auto& a : alphas)
      if (a && *a >= 0.5) lowers.emplace_back(*a, lower_functional(psi, theta, *a, lower_budget, o.seed));
  }

  Sink sink(o.out, out);
  std::ostream& os = sink.stream();
  if (o.format == "json") {
    json j;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    if (lower_budget >= 0) {
      j["lower"] = json::array();
      for (const auto& [a, l] : lowers) {
        json e = to_json(l);
        e["alpha"] = number_json(a);
        j["lower"].push_back(std::move(e));
      }
    }
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "state_digest,spec,alpha,n,e_n,E_lo,E_hi,F_lo,F_hi,closed_upper,closed_lower,violations\n";
    for (const auto& r : reports)
      for (const auto& [n, e] : r.sequence)
        os << r.state_digest << ",\"" << r.spec << "\"," << alpha_text(r.alpha) << "," << n << "," << format_number(e)
           << "," << format_number(r.e_interval[0]) << "," << format_number(r.e_interval[1]) << ","
           << format_number(r.f_interval[0]) << "," << format_number(r.f_interval[1]) << ","
           << format_number(r.closed_upper) << "," << opt_number(r.closed_lower) << "," << r.violations.size()
           << "\n";
  } else {
    for (const auto& r : reports) {
      os << "state " << r.state_digest << "  spec " << r.spec << "  alpha " << alpha_text(r.alpha) << "\n";
      for (const auto& [n, e] : r.sequence) os << "  n=" << n << "  e_n=" << format_number(e) << "\n";
      os << "  E in [" << format_number(r.e_interval[0]) << ", " << format_number(r.e_interval[1]) << "]\n";
      os << "  F in [" << format_number(r.f_interval[0]) << ", " << format_number(r.f_interval[1]) << "]\n";
      os << "  closed upper " << format_number(r.closed_upper);
      if (r.closed_lower) os << "  closed lower " << format_number(*r.closed_lower);
      os << "\n";
      for (const auto& v : r.violations) os << "  violation: " << v << "\n";
    }
    for (const auto& [a, l] : lowers)
      os << "lower functional alpha " << format_number(a) << ": E=" << format_number(l.e_value)
         << " F=" << format_number(l.f_value) << " via " << l.best << " (" << l.candidates << " candidates)\n";
  }
  return 0;
}

int cmd_verify(const std::string& suites_text, const std::string& fault, double tol, std::uint64_t seed,
               const std::string& format, const std::string& out_path, std::ostream& out) {
  check_format(format);
  std::vector<std::string> suites = split(suites_text, ',');
  suites.erase(std::remove(suites.begin(), suites.end(), std::string()), suites.end());
  require(!suites.empty(), "empty suite selection");
  for (const auto& s : suites)
    require(s == "default" || std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end(),
            "unknown suite '" + s + "'");
  require(fault == "none" || fault == "flip-entropy-sign", "--fault is none or flip-entropy-sign");

  VerifyConfig cfg;
  cfg.tol = tol;
  cfg.seed = seed;
  if (fault == "flip-entropy-sign") cfg.family.entropy_sign = -1.0;

  std::vector<CheckResult> checks;
  for (const auto& s : suites) {
    auto c = run_suite(s, cfg);
    checks.insert(checks.end(), c.begin(), c.end());
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });

  Sink sink(out_path, out);
  std::ostream& os = sink.stream();
  if (format == "json") {
    json j;
    j["suites"] = suites;
    j["seed"] = seed;
    j["tol"] = number_json(tol);
    j["fault"] = fault;
    j["checks"] = json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"suite", c.suite}, {"name", c.name}, {"margin", number_json(c.margin)}, {"pass", c.pass}});
    j["total"] = checks.size();
    j["failed"] = failed;
    j["all_pass"] = failed == 0;
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "suite,name,margin,pass\n";
    for (const auto& c : checks)
      os << c.suite << ",\"" << c.name << "\"," << format_number(c.margin) << "," << (c.pass ? "true" : "false")
         << "\n";
  } else {
    for (const auto& c : checks)
      os << (c.pass ? "PASS " : "FAIL ") << c.suite << " " << c.name << "  margin " << format_number(c.margin) << "\n";
    os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_convergence(SpecOptions o, std::ostream& out) {
  check_format(o.format);
  const auto alphas = parse_alphas(o.alpha);
  require(alphas.size() == 1, "convergence takes a single --alpha");
  const MultipartiteState psi = parse_state(o.state, o.seed);
  const FamilySpec spec = build_spec(o, psi.space().parties());
  const FunctionalReport r = estimate_upper(psi, spec, alphas[0], o.n_max, {}, o.tol);

  Sink sink(o.out, out);
  std::ostream& os = sink.stream();
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& [n, e] : r.sequence)
      rows.push_back({{"n", n},
                      {"e_n", number_json(e)},
                      {"closed_upper", number_json(r.closed_upper)},
                      {"closed_lower", r.closed_lower ? number_json(*r.closed_lower) : json(nullptr)},
                      {"gap", number_json(r.closed_upper - e)}});
    json j;
    j["state_digest"] = r.state_digest;
    j["spec"] = r.spec;
    j["alpha"] = r.alpha ? json(number_json(*r.alpha)) : json("limit1");
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "n,e_n,closed_upper,closed_lower,gap\n";
    for (const auto& [n, e] : r.sequence)
      os << n << "," << format_number(e) << "," << format_number(r.closed_upper) << "," << opt_number(r.closed_lower)
         << "," << format_number(r.closed_upper - e) << "\n";
  } else {
    os << "state " << r.state_digest << "  spec " << r.spec << "  alpha " << alpha_text(r.alpha) << "\n";
    for (const auto& [n, e] : r.sequence)
      os << "  n=" << n << "  e_n=" << format_number(e) << "  gap=" << format_number(r.closed_upper - e) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement monotones from observables on symmetric tensor powers", "symmono"};
  app.require_subcommand(1);

  SpecOptions comp;
  int lower_budget = -1;
  auto* compute = app.add_subcommand("compute", "finite-n sequences, intervals and closed bounds");
  add_spec_options(compute, comp, true);
  compute->add_option("--format", comp.format, "json, csv or pretty")->capture_default_str();
  compute->add_option("--lower-budget", lower_budget,
                      "also run the lower functional with this many random filters (alpha >= 1/2)");

  std::string suites = "default", fault = "none", vformat = "json", vout;
  double vtol = 1e-9;
  std::uint64_t vseed = 0;
  auto* verify = app.add_subcommand("verify", "axiom and property checks");
  verify->add_option("--suite", suites, "default or a comma list of suites")->capture_default_str();
  verify->add_option("--fault", fault, "none or flip-entropy-sign")->capture_default_str();
  verify->add_option("--tol", vtol, "tolerance")->capture_default_str();
  verify->add_option("--seed", vseed, "seed")->capture_default_str();
  verify->add_option("--format", vformat, "json, csv or pretty")->capture_default_str();
  verify->add_option("--out", vout, "write to this file instead of stdout");

  SpecOptions conv;
  conv.format = "csv";
  conv.n_max = 6;
  auto* convergence = app.add_subcommand("convergence", "per-n table of e_n, closed bounds and gap");
  add_spec_options(convergence, conv, false);
  convergence->add_option("--format", conv.format, "csv, json or pretty")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) return cmd_compute(comp, lower_budget, out);
    if (*verify) return cmd_verify(suites, fault, vtol, vseed, vformat, vout, out);
    if (*convergence) return cmd_convergence(conv, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace symmono::cli
