#include "gupspec/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "gupspec/errors.hpp"

namespace gup::cli {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double x = 0;
  std::string s = trim(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParameterError(key + ": expected a number, got '" + v + "'");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  int x = 0;
  std::string s = trim(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParameterError(key + ": expected an integer, got '" + v + "'");
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  std::string s = trim(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ParameterError(key + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> split(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string canonical_model(const std::string& v) {
  std::string s = trim(v);
  if (s == "ho" || s == "oscillator" || s == "harmonic") return "ho";
  if (s == "swanson") return "swanson";
  if (s == "pt" || s == "poschl-teller" || s == "poeschl-teller") return "pt";
  throw ParameterError("model: expected ho, swanson or pt, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"model",
       [](RunConfig& c, const std::string&, const std::string& v) {
         c.model = canonical_model(v);
         c.model_given = true;
       }},
      {"rep", [](RunConfig& c, const std::string&, const std::string& v) { c.rep = parse_rep(trim(v)); }},
      {"hbar", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.hbar = to_double(k, v); }},
      {"mass", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.mass = to_double(k, v); }},
      {"omega", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.omega = to_double(k, v); }},
      {"tau", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.tau = to_double(k, v); }},
      {"alpha", [](RunConfig& c, const std::string& k, const std::string& v) { c.alpha = to_double(k, v); }},
      {"beta", [](RunConfig& c, const std::string& k, const std::string& v) { c.beta = to_double(k, v); }},
      {"nmax", [](RunConfig& c, const std::string& k, const std::string& v) { c.nmax = to_int(k, v); }},
      {"grid", [](RunConfig& c, const std::string& k, const std::string& v) { c.grid = to_int(k, v); }},
      {"oracle", [](RunConfig& c, const std::string& k, const std::string& v) { c.oracle = to_bool(k, v); }},
      {"check", [](RunConfig& c, const std::string& k, const std::string& v) { c.check = to_bool(k, v); }},
      {"format",
       [](RunConfig& c, const std::string&, const std::string& v) {
         std::string s = trim(v);
         if (s == "csv")
           c.format = Format::Csv;
         else if (s == "json")
           c.format = Format::Json;
         else
           throw ParameterError("format: expected csv or json, got '" + v + "'");
       }},
      {"out", [](RunConfig& c, const std::string&, const std::string& v) { c.out = trim(v); }},
      {"profile",
       [](RunConfig& c, const std::string&, const std::string& v) {
         c.tol = tolerance_profile(trim(v));
         c.profile = trim(v);
       }},
      {"state", [](RunConfig& c, const std::string& k, const std::string& v) { c.state = to_int(k, v); }},
      {"samples", [](RunConfig& c, const std::string& k, const std::string& v) { c.samples = to_int(k, v); }},
      {"p-lo", [](RunConfig& c, const std::string& k, const std::string& v) { c.p_lo = to_double(k, v); }},
      {"p-hi", [](RunConfig& c, const std::string& k, const std::string& v) { c.p_hi = to_double(k, v); }},
      {"words",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         std::vector<std::string> w = split(v);
         if (w.empty()) throw ParameterError(k + ": no operator words given");
         c.words = w;
       }},
      {"taus",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         c.taus.clear();
         for (const auto& s : split(v)) c.taus.push_back(to_double(k, s));
         if (c.taus.empty()) throw ParameterError(k + ": empty list");
       }},
      {"alpha-lo", [](RunConfig& c, const std::string& k, const std::string& v) { c.alpha_lo = to_double(k, v); }},
      {"alpha-hi", [](RunConfig& c, const std::string& k, const std::string& v) { c.alpha_hi = to_double(k, v); }},
      {"alpha-step",
       [](RunConfig& c, const std::string& k, const std::string& v) { c.alpha_step = to_double(k, v); }},
      {"suite", [](RunConfig& c, const std::string&, const std::string& v) { c.suite = trim(v); }},
      {"claims", [](RunConfig& c, const std::string& k, const std::string& v) { c.claims = to_bool(k, v); }},
      {"inject-wrong-branch",
       [](RunConfig& c, const std::string& k, const std::string& v) { c.inject_wrong_branch = to_bool(k, v); }},
  };
  return table;
}

}  // namespace

Tolerances tolerance_profile(const std::string& name) {
  Tolerances t;
  double f;
  if (name == "standard")
    f = 1;
  else if (name == "strict")
    f = 0.1;
  else if (name == "loose")
    f = 100;
  else
    throw ParameterError("profile: expected standard, strict or loose, got '" + name + "'");
  t.oracle *= f;
  t.commutator *= f;
  t.orthonormality *= f;
  t.invariance *= f;
  t.master *= f;
  t.energy *= f;
  t.zero *= f;
  return t;
}

ModelSpec RunConfig::model_spec() const {
  if (model == "swanson") return Swanson{alpha.value_or(0.1), beta.value_or(0.2)};
  if (model == "pt") return PoschlTeller{alpha.value_or(1.0), beta.value_or(0.5)};
  return HarmonicOscillator{};
}

Format RunConfig::output_format(Format fallback) const { return format.value_or(fallback); }

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  for (const auto& [name, set] : setters())
    if (name == key) return set(cfg, key, value);
  throw ParameterError("unknown configuration key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParameterError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    const auto& keys = setting_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParameterError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

void validate(const RunConfig& cfg) {
  cfg.params.validate();
  if (cfg.nmax < 0) throw ParameterError("nmax must be non-negative");
  if (cfg.grid < 64) throw ParameterError("grid must be at least 64");
  if (cfg.state < 0) throw ParameterError("state must be non-negative");
  if (cfg.samples < 2) throw ParameterError("samples must be at least 2");
  if (!(cfg.alpha_step > 0) || !(cfg.alpha_lo < cfg.alpha_hi)) throw ParameterError("bad alpha range");
  for (double t : cfg.taus)
    if (!(t >= 0)) throw ParameterError("taus must be non-negative");
  if (cfg.p_lo && cfg.p_hi && !(*cfg.p_lo < *cfg.p_hi)) throw ParameterError("p-lo must be below p-hi");
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["model"] = cfg.model;
  j["rep"] = to_string(cfg.rep);
  j["hbar"] = cfg.params.hbar;
  j["mass"] = cfg.params.mass;
  j["omega"] = cfg.params.omega;
  j["tau"] = cfg.params.tau;
  ModelSpec m = cfg.model_spec();
  if (auto s = std::get_if<Swanson>(&m)) {
    j["alpha"] = s->alpha;
    j["beta"] = s->beta;
  } else if (auto p = std::get_if<PoschlTeller>(&m)) {
    j["alpha"] = p->alpha;
    j["beta"] = p->beta;
  }
  j["nmax"] = cfg.nmax;
  j["grid"] = cfg.grid;
  j["oracle"] = cfg.oracle;
  j["check"] = cfg.check;
  j["profile"] = cfg.profile;
  return j;
}

}  // namespace gup::cli
