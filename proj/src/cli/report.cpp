#include "report.hpp"

#include <sstream>

#ifndef COSYM_VERSION
#define COSYM_VERSION "0.0.0"
#endif

namespace cosym::cli {

std::string version_string() { return COSYM_VERSION; }

namespace {

const char* injection_name(Injection i) {
  switch (i) {
    case Injection::none: return "none";
    case Injection::phi_star_sign: return "phi-star-sign";
    case Injection::twist_sign: return "twist-sign";
    case Injection::k3_sign: return "k3-sign";
  }
  return "none";
}

std::string witness_text(const Witness& w, ModelDims dims) {
  auto names = [&](Blade b) {
    std::string out;
    for (int i : b.indices()) {
      if (!out.empty()) out += '^';
      out += FrameLabel::from_index(dims, i).name();
    }
    return out.empty() ? std::string("1") : out;
  };
  return "degree " + std::to_string(w.degree) + ", source " + names(w.source) + ", target " + names(w.target) +
         ", difference " + w.value;
}

}  // namespace

Json envelope(const RunConfig& config, bool passed, Json results) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "cosym";
  j["version"] = version_string();
  j["command"] = config.command;
  Json cfg;
  cfg["n"] = config.n;
  cfg["strict"] = config.strict;
  cfg["integer"] = config.integer;
  if (config.bh_given) cfg["bh"] = config.bh;
  if (config.inject != Injection::none) cfg["inject"] = injection_name(config.inject);
  j["config"] = cfg;
  j["status"] = passed ? "pass" : "fail";
  j["results"] = std::move(results);
  return j;
}

Json blade_names(Blade b, ModelDims dims) {
  Json out = Json::array();
  for (int i : b.indices()) {
    if (i < dims.dim()) {
      out.push_back(FrameLabel::from_index(dims, i).name());
    } else {
      out.push_back(std::to_string(i));
    }
  }
  return out;
}

Json to_json(const IdentityReport& r, ModelDims dims) {
  Json j;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["passed"] = r.passed;
  j["max_degree"] = r.max_degree;
  if (!r.passed) {
    j["instance"] = r.instance;
    j["detail"] = r.detail;
    if (r.witness) {
      j["witness"] = {{"degree", r.witness->degree},
                      {"source", blade_names(r.witness->source, dims)},
                      {"target", blade_names(r.witness->target, dims)},
                      {"difference", r.witness->value}};
    }
  }
  return j;
}

Json to_json(const ConstraintCheck& c) {
  return Json{{"name", c.name},
              {"k", c.k},
              {"statement", c.statement},
              {"value", c.value},
              {"margin", c.margin},
              {"passed", c.passed},
              {"severity", c.severity == ConstraintCheck::Severity::warning ? "warning" : "error"}};
}

Json to_json(const ConstraintReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) out.push_back(to_json(c));
  return out;
}

Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"statement", c.statement}, {"passed", c.passed},
         {"severity", c.warning ? "warning" : "error"}};
  if (!c.data.empty()) j["data"] = c.data;
  return j;
}

Json to_json(const PairCheck& p) {
  Json coefficients = Json::object();
  for (Generator g : kGenerators) {
    const Rational& v = p.operator_side[generator_index(g)];
    if (v != 0) coefficients[std::string(generator_name(g))] = v.str();
  }
  return Json{{"x", generator_name(p.x)},
              {"y", generator_name(p.y)},
              {"bracket", coefficients},
              {"in_span", p.in_span},
              {"matches_relations", p.matches_table},
              {"homomorphism", p.homomorphism},
              {"passed", p.passed()}};
}

Json to_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

std::string format_sequence(const std::vector<Count>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_series(const PoincareSeries& p) {
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Count c = p.at(k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string format_combination(const Combination& c) {
  std::string out;
  for (Generator g : kGenerators) {
    const Rational& v = c[generator_index(g)];
    if (v == 0) continue;
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    const Rational a = v < 0 ? Rational(-v) : v;
    if (a != 1) out += a.str() + " ";
    out += generator_name(g);
  }
  return out.empty() ? "0" : out;
}

std::string text_line(bool passed, const std::string& name, const std::string& statement, bool warning) {
  const char* tag = passed ? "PASS" : (warning ? "WARN" : "FAIL");
  return std::string(tag) + "  " + name + "  " + statement + "\n";
}

std::string text_identity(const IdentityReport& r, ModelDims dims) {
  std::string out = text_line(r.passed, r.name, r.statement);
  if (!r.passed) {
    out += "      instance: " + (r.instance.empty() ? std::string("-") : r.instance) + "\n";
    if (!r.detail.empty()) out += "      detail: " + r.detail + "\n";
    if (r.witness) out += "      witness: " + witness_text(*r.witness, dims) + "\n";
  }
  return out;
}

std::string text_constraints(const std::string& title, const ConstraintReport& r, bool strict) {
  std::ostringstream out;
  out << title << ":\n";
  for (const auto& c : r.checks) {
    const bool warning = c.severity == ConstraintCheck::Severity::warning && !strict;
    out << "  " << (c.passed ? "PASS" : (warning ? "WARN" : "FAIL")) << "  " << c.statement << "  (value " << c.value
        << ", margin " << c.margin << ")\n";
  }
  return out.str();
}

std::string text_check(const Check& c) { return text_line(c.passed, c.name, c.statement, c.warning); }

}  // namespace cosym::cli
