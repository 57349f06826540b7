// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

#include <afock/scenario.hpp>

#include <algorithm>
#include <fstream>
#include <map>

namespace afock {

using nlohmann::json;

GroupAction Scenario::action() const { return GroupAction::from_cycles(index(), generators, caps.group_order); }

BernoulliSystem Scenario::system() const { return BernoulliSystem(action(), marginals); }

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw InputError("config: " + field + ": " + why);
}

template <typename T>
void read(const json& obj, const char* key, T& out, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    bad(where + "." + key, "wrong type");
  }
}

Rational parse_field_marginal(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "marginals must be strings of the form \"num/den\"");
  try {
    return parse_marginal(v.get<std::string>());
  } catch (const InputError& e) {
    bad(where, e.what());
  }
}

}  // namespace

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) bad("<root>", "expected an object");
  Scenario s;
  read(j, "name", s.name, "");
  if (!j.contains("labels") || !j.at("labels").is_array()) bad("labels", "required array of strings");
  for (const auto& l : j.at("labels")) {
    if (!l.is_string()) bad("labels", "labels must be strings");
    s.labels.push_back(l.get<std::string>());
  }
  if (s.labels.empty()) bad("labels", "at least one label is required");

  if (!j.contains("marginals") || !j.at("marginals").is_array()) bad("marginals", "required array");
  const auto& m = j.at("marginals");
  if (m.size() != s.labels.size()) bad("marginals", "one marginal per label is required");
  for (std::size_t i = 0; i < m.size(); ++i) {
    s.marginals.push_back(parse_field_marginal(m[i], "marginals[" + std::to_string(i) + "]"));
  }

  if (j.contains("generators")) {
    const auto& g = j.at("generators");
    if (!g.is_array()) bad("generators", "expected an array of cycle lists");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string where = "generators[" + std::to_string(i) + "]";
      if (!g[i].is_array()) bad(where, "expected a list of cycles");
      std::vector<std::vector<std::string>> cycles;
      for (const auto& c : g[i]) {
        if (!c.is_array()) bad(where, "each cycle is a list of labels");
        std::vector<std::string> cyc;
        for (const auto& l : c) {
          if (!l.is_string()) bad(where, "cycle entries must be labels");
          cyc.push_back(l.get<std::string>());
        }
        cycles.push_back(std::move(cyc));
      }
      s.generators.push_back(std::move(cycles));
    }
  }

  read(j, "seed", s.seed, "");
  if (j.contains("suites")) {
    if (!j.at("suites").is_array()) bad("suites", "expected an array of suite names");
    for (const auto& n : j.at("suites")) {
      if (!n.is_string()) bad("suites", "suite names are strings");
      const auto name = n.get<std::string>();
      if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        bad("suites", "unknown suite '" + name + "'");
      }
      s.suites.insert(name);
    }
  }

  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    if (!t.is_object()) bad("tolerances", "expected an object");
    std::map<std::string, double*> fields{
        {"car", &s.tol.car},
        {"moment", &s.tol.moment},
        {"tomita", &s.tol.tomita},
        {"wick", &s.tol.wick},
        {"rn_state", &s.tol.rn_state},
        {"rn_normalisation", &s.tol.rn_normalisation},
        {"cocycle", &s.tol.cocycle},
        {"unitary", &s.tol.unitary},
        {"multiplicative", &s.tol.multiplicative},
        {"commutes_j", &s.tol.commutes_j},
        {"permutation", &s.tol.permutation},
        {"key_max", &s.tol.key_max},
        {"key_spectral", &s.tol.key_spectral},
        {"resolution", &s.tol.resolution},
        {"vanishing", &s.tol.vanishing},
        {"sharpness", &s.tol.sharpness},
        {"crossed", &s.tol.crossed},
        {"membership", &s.tol.membership},
    };
    for (const auto& [key, value] : t.items()) {
      auto it = fields.find(key);
      if (it == fields.end()) bad("tolerances." + key, "unknown tolerance");
      if (!value.is_number() || value.get<double>() <= 0) bad("tolerances." + key, "must be a positive number");
      *it->second = value.get<double>();
    }
  }

  if (j.contains("samples")) {
    const auto& t = j.at("samples");
    if (!t.is_object()) bad("samples", "expected an object");
    std::map<std::string, std::size_t*> fields{
        {"moments", &s.samples.moments},
        {"moment_degree", &s.samples.moment_degree},
        {"tomita", &s.samples.tomita},
        {"wick_tuples", &s.samples.wick_tuples},
        {"wick_n", &s.samples.wick_n},
        {"boundary", &s.samples.boundary},
        {"boundary_max_z", &s.samples.boundary_max_z},
        {"commutation", &s.samples.commutation},
        {"alpha_products", &s.samples.alpha_products},
        {"zf", &s.samples.zf},
    };
    for (const auto& [key, value] : t.items()) {
      auto it = fields.find(key);
      if (it == fields.end()) bad("samples." + key, "unknown sample count");
      if (!value.is_number_unsigned()) bad("samples." + key, "must be a non-negative integer");
      *it->second = value.get<std::size_t>();
    }
  }

  if (j.contains("caps")) {
    const auto& c = j.at("caps");
    if (!c.is_object()) bad("caps", "expected an object");
    for (const auto& [key, value] : c.items()) {
      if (!value.is_number_unsigned()) bad("caps." + key, "must be a non-negative integer");
      if (key == "crossed_dimension") {
        s.caps.crossed_dimension = value.get<Eigen::Index>();
      } else if (key == "group_order") {
        s.caps.group_order = value.get<std::size_t>();
      } else if (key == "rank_budget") {
        s.caps.rank_budget = value.get<std::size_t>();
      } else if (key == "kakutani_window") {
        s.caps.kakutani_window = value.get<std::size_t>();
      } else {
        bad("caps." + key, "unknown cap");
      }
    }
  }

  // Label and permutation validity, checked by building the objects.
  try {
    (void)s.system();
  } catch (const InputError& e) {
    bad("generators", e.what());
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("config: cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config: parse error: ") + e.what());
  }
  return parse_scenario(j);
}

json to_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  j["labels"] = s.labels;
  json m = json::array();
  for (const auto& p : s.marginals) m.push_back(to_string(p));
  j["marginals"] = m;
  j["generators"] = s.generators;
  j["seed"] = s.seed;
  j["suites"] = s.suites.empty() ? suite_names() : std::vector<std::string>(s.suites.begin(), s.suites.end());
  return j;
}

Scenario default_scenario() {
  Scenario s;
  s.name = "default";
  s.labels = {"a", "b", "c"};
  s.marginals = {Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  s.generators = {{{"a", "b", "c"}}};
  return s;
}

Scenario permute_labels(const Scenario& s, const std::vector<std::size_t>& order) {
  if (order.size() != s.labels.size()) throw InputError("permute labels: order has the wrong length");
  std::vector<bool> seen(order.size(), false);
  Scenario out = s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size() || seen[order[i]]) throw InputError("permute labels: not a permutation");
    seen[order[i]] = true;
    out.labels[i] = s.labels[order[i]];
    out.marginals[i] = s.marginals[order[i]];
  }
  return out;
}

}  // namespace afock
