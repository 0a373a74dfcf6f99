#pragma once

// JSON and text rendering of verification results.

#include "cosym/betti.hpp"
#include "cosym/cli.hpp"
#include "cosym/cw_homology.hpp"
#include "cosym/identity_report.hpp"
#include "cosym/so41.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cosym::cli {

using Json = nlohmann::ordered_json;

/// A named pass/fail item; warnings only fail under --strict.
struct Check {
  std::string name;
  std::string statement;
  bool passed = false;
  bool warning = false;
  Json data = Json::object();

  bool fails(bool strict) const { return !passed && (strict || !warning); }
};

std::string version_string();

Json envelope(const RunConfig& config, bool passed, Json results);

Json to_json(const IdentityReport& r, ModelDims dims);
Json to_json(const ConstraintCheck& c);
Json to_json(const ConstraintReport& r);
Json to_json(const Check& c);
Json to_json(const PairCheck& p);
Json to_json(const std::vector<BigInt>& values);

/// Frame names of the indices of a blade, e.g. ["zeta1", "phi1*zeta1"].
Json blade_names(Blade b, ModelDims dims);

std::string format_sequence(const std::vector<Count>& values);
std::string format_series(const PoincareSeries& p);
std::string format_combination(const Combination& c);

std::string text_line(bool passed, const std::string& name, const std::string& statement, bool warning = false);
std::string text_identity(const IdentityReport& r, ModelDims dims);
std::string text_constraints(const std::string& title, const ConstraintReport& r, bool strict);
std::string text_check(const Check& c);

}  // namespace cosym::cli
