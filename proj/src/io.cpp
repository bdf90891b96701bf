#include "symmono/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "symmono/errors.hpp"

namespace symmono {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

json number_json(double x) {
  if (!std::isfinite(x)) return format_number(x);
  return round12(x);
}

std::string state_digest(const MultipartiteState& psi) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (int d : psi.space().dims()) feed(std::to_string(d) + ",");
  char buf[64];
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    const cplx a = psi.amplitudes()[i];
    std::snprintf(buf, sizeof buf, "%.17g:%.17g;", a.real() + 0.0, a.imag() + 0.0);
    feed(buf);
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    require(!tok.empty(), "empty integer in '" + s + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + tok + "'");
    }
    require(pos == tok.size(), "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: '" + tok + "'");
    }
    require(pos == tok.size() && std::isfinite(v), "not a number: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

void check_dims(const std::vector<int>& dims) {
  require(!dims.empty(), "state needs at least one party");
  for (int d : dims) require(d >= 1 && d <= 64, "local dimensions must lie in [1,64]");
}

// Σ_i √p_i |ii⟩ on C^r ⊗ C^r.
MultipartiteState schmidt_state(const std::vector<double>& p) {
  require(!p.empty() && p.size() <= 64, "schmidt needs between 1 and 64 coefficients");
  const int r = static_cast<int>(p.size());
  std::vector<cplx> amps(static_cast<std::size_t>(r) * r, 0.0);
  for (int i = 0; i < r; ++i) {
    require(p[i] >= 0.0, "schmidt coefficients must be nonnegative");
    amps[static_cast<std::size_t>(i) * r + i] = std::sqrt(p[i]);
  }
  return states::explicit_state({r, r}, amps);
}

MultipartiteState named_state(const std::string& name, const std::vector<int>& p, std::uint64_t seed) {
  if (name == "ghz" || name == "unit") {
    require(p.size() == 2, name + " takes two parameters: level and parties");
    require(p[0] >= 1 && p[0] <= 64 && p[1] >= 1 && p[1] <= 12, name + ": parameter out of range");
    return name == "ghz" ? states::ghz(p[0], p[1]) : states::unit(p[0], p[1]);
  }
  if (name == "w") {
    require(p.size() == 1 && p[0] >= 1 && p[0] <= 12, "w takes one parameter: parties");
    return states::w(p[0]);
  }
  if (name == "random" || name == "product") {
    check_dims(p);
    if (name == "random") return states::random(p, seed);
    MultipartiteState z = states::zero(p);
    Eigen::VectorXcd a = z.amplitudes();
    a[0] = 1.0;
    return {z.space(), a};
  }
  throw InvalidArgument("unknown state name '" + name + "'");
}

std::vector<int> json_ints(const json& j, const char* key) {
  require(j.contains(key), std::string("state params need '") + key + "'");
  const json& v = j.at(key);
  if (v.is_array()) {
    std::vector<int> out;
    for (const auto& x : v) {
      require(x.is_number_integer(), std::string("'") + key + "' must hold integers");
      out.push_back(x.get<int>());
    }
    return out;
  }
  require(v.is_number_integer(), std::string("'") + key + "' must be an integer");
  return {v.get<int>()};
}

}  // namespace

MultipartiteState parse_state(const std::string& text, std::uint64_t seed) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string name = text.substr(0, colon);
    if (name == "schmidt") return schmidt_state(parse_doubles(text.substr(colon + 1)));
    return named_state(name, parse_ints(text.substr(colon + 1)), seed);
  }
  std::ifstream in(text);
  require(static_cast<bool>(in), "cannot open state file '" + text + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed state file: ") + e.what());
  }
  return state_from_json(j, seed);
}

MultipartiteState state_from_json(const json& j, std::uint64_t seed) {
  require(j.is_object(), "state JSON must be an object");
  if (j.contains("name")) {
    require(j.at("name").is_string(), "state name must be a string");
    const std::string name = j.at("name").get<std::string>();
    const json params = j.value("params", json::object());
    require(params.is_object(), "state params must be an object");
    if (j.contains("seed")) {
      require(j.at("seed").is_number_unsigned(), "state seed must be a nonnegative integer");
      seed = j.at("seed").get<std::uint64_t>();
    }
    try {
      if (name == "schmidt") {
        require(params.contains("coefficients"), "schmidt params need 'coefficients'");
        return schmidt_state(params.at("coefficients").get<std::vector<double>>());
      }
      if (name == "ghz") return named_state(name, {json_ints(params, "level")[0], json_ints(params, "parties")[0]}, seed);
      if (name == "unit") return named_state(name, {json_ints(params, "rank")[0], json_ints(params, "parties")[0]}, seed);
      if (name == "w") return named_state(name, json_ints(params, "parties"), seed);
      return named_state(name, json_ints(params, "dims"), seed);
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("malformed state params: ") + e.what());
    }
  }
  require(j.contains("dims") && j.contains("amplitudes"), "state JSON needs dims and amplitudes, or a name");
  std::vector<int> dims;
  std::vector<cplx> amps;
  try {
    dims = j.at("dims").get<std::vector<int>>();
    for (const auto& a : j.at("amplitudes")) {
      if (a.is_number()) {
        amps.emplace_back(a.get<double>(), 0.0);
      } else {
        require(a.is_array() && a.size() == 2, "amplitudes are numbers or [re, im] pairs");
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed state JSON: ") + e.what());
  }
  check_dims(dims);
  return states::explicit_state(dims, amps);
}

json state_to_json(const MultipartiteState& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i)
    amps.push_back({psi.amplitudes()[i].real(), psi.amplitudes()[i].imag()});
  return {{"dims", psi.space().dims()}, {"amplitudes", amps}};
}

namespace {

GMeanTree parse_tree_rec(const json& j, int parties, std::vector<Bipartition>& leaves) {
  require(j.is_object(), "tree nodes must be objects");
  if (j.contains("leaf")) {
    require(j.at("leaf").is_string(), "tree leaf must be a bipartition string");
    Bipartition b = Bipartition::parse(j.at("leaf").get<std::string>());
    require(b.parties() == parties, "tree leaf " + b.to_string() + " has the wrong party count");
    leaves.push_back(std::move(b));
    return GMeanTree::leaf(static_cast<int>(leaves.size()) - 1);
  }
  require(j.contains("t") && j.contains("left") && j.contains("right"), "tree nodes need t, left and right");
  require(j.at("t").is_number(), "tree weight t must be a number");
  GMeanTree l = parse_tree_rec(j.at("left"), parties, leaves);
  GMeanTree r = parse_tree_rec(j.at("right"), parties, leaves);
  return GMeanTree::node(std::move(l), std::move(r), j.at("t").get<double>());
}

}  // namespace

ParsedTree parse_tree(const json& j, int parties) {
  ParsedTree out{{}, GMeanTree::leaf(0)};
  out.tree = parse_tree_rec(j, parties, out.leaves);
  return out;
}

FamilySpec family_from_tree(const ParsedTree& t) {
  if (t.leaves.size() == 1) return FamilySpec::bipartite(t.leaves.front());
  std::vector<FamilySpec> kids;
  for (const auto& b : t.leaves) kids.push_back(FamilySpec::bipartite(b));
  return FamilySpec::gmean(std::move(kids), t.tree);
}

namespace {

json theta_json(const WeightedBipartitions& theta) {
  json out = json::array();
  for (const auto& [b, w] : theta) out.push_back({{"bipartition", b.to_string()}, {"weight", number_json(w)}});
  return out;
}

}  // namespace

json to_json(const FunctionalReport& r) {
  json seq = json::array();
  for (const auto& [n, e] : r.sequence) seq.push_back({n, number_json(e)});
  json j;
  j["state_digest"] = r.state_digest;
  j["spec"] = r.spec;
  j["alpha"] = r.alpha ? json(number_json(*r.alpha)) : json("limit1");
  j["theta"] = theta_json(r.theta);
  j["sequence"] = seq;
  j["E_interval"] = {number_json(r.e_interval[0]), number_json(r.e_interval[1])};
  j["F_interval"] = {number_json(r.f_interval[0]), number_json(r.f_interval[1])};
  j["closed_upper"] = number_json(r.closed_upper);
  j["closed_lower"] = r.closed_lower ? number_json(*r.closed_lower) : json(nullptr);
  j["violations"] = r.violations;
  return j;
}

json to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"axiom", c.axiom}, {"instance", c.instance}, {"margin", number_json(c.margin)}, {"pass", c.pass}};
    e["slack_factor"] = c.slack_factor ? number_json(*c.slack_factor) : json(nullptr);
    checks.push_back(std::move(e));
  }
  return {{"checks", checks}, {"all_pass", r.all_pass()}};
}

json to_json(const LowerFunctionalResult& r) {
  return {{"E", number_json(r.e_value)}, {"F", number_json(r.f_value)}, {"best", r.best}, {"candidates", r.candidates}};
}

}  // namespace symmono
