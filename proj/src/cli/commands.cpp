#include "cosym/cli.hpp"

#include "cosym/betti.hpp"
#include "cosym/cw_homology.hpp"
#include "cosym/so41.hpp"
#include "cosym/verify_identities.hpp"
#include "report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cosym::cli {
namespace {

/// Thrown by commands for input errors that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string header(const RunConfig& config) {
  return "cosym " + version_string() + "  " + config.command + "  n=" + std::to_string(config.n) + "\n";
}

CommandOutput finish(const RunConfig& config, bool passed, Json results, std::string text) {
  CommandOutput out;
  out.exit_code = passed ? kExitSuccess : kExitFailure;
  out.json = envelope(config, passed, std::move(results)).dump(2) + "\n";
  out.text = header(config) + text + "status: " + (passed ? "pass" : "fail") + "\n";
  return out;
}

ContactModel<Rational> model_for(const RunConfig& config) {
  PhiStarTable table = PhiStarTable::standard(ModelDims::make(config.n));
  if (config.inject == Injection::phi_star_sign && config.n >= 1) {
    table = table.with_sign_flip(1, FrameLabel::zeta(1).index(table.dims()));
  }
  return ContactModel<Rational>(table);
}

TwistMap twist_for(const RunConfig& config) {
  TwistMap f = TwistMap::right_multiplication_by_i();
  return config.inject == Injection::twist_sign ? f.with_sign_flip(1) : f;
}

// --- suites, shared by the single commands and `report` ----------------------------

struct SuiteResult {
  bool passed = false;
  Json results;
  std::string text;
};

SuiteResult identities_suite(const RunConfig& config) {
  const auto model = model_for(config);
  const auto reports = verify_identities(model, config.threads);
  SuiteResult s;
  s.passed = all_passed(reports);
  Json list = Json::array();
  int held = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r, model.dims()));
    s.text += text_identity(r, model.dims());
    held += r.passed ? 1 : 0;
  }
  s.results = Json{{"n", config.n}, {"identities", list}};
  s.text += std::to_string(held) + "/" + std::to_string(reports.size()) + " identities hold\n";
  return s;
}

SuiteResult so41_suite(const RunConfig& config) {
  if (config.n < 1) throw UsageError("so41-check needs --n >= 1");
  ModuleOptions options;
  if (config.inject == Injection::k3_sign) options.negated = Generator::K3;
  const ModuleReport module = verify_module(model_for(config), options);
  const auto table = check_t_bracket_table();

  SuiteResult s;
  bool table_ok = true;
  Json table_json = Json::array();
  for (const auto& e : table) {
    table_ok = table_ok && e.passed;
    table_json.push_back(Json{{"relation", e.relation}, {"passed", e.passed}});
  }
  Json pairs = Json::array();
  std::ostringstream text;
  text << text_line(table_ok, "so41.t_brackets",
                    std::to_string(table.size()) + " bracket relations among the t_ij");
  for (const auto& e : table) {
    if (!e.passed) text << "      failed: " << e.relation << "\n";
  }
  text << text_line(module.image_rank == 10, "so41.image_rank",
                    "rank of the images of H, L_a, Lambda_a, K_a is " + std::to_string(module.image_rank));
  text << text_line(module.span_rank == 10, "so41.span_rank",
                    "rank of the operators H, L_a, Lambda_a, K_a is " + std::to_string(module.span_rank));
  int good = 0;
  for (const auto& p : module.pairs) {
    pairs.push_back(to_json(p));
    good += p.passed() ? 1 : 0;
    if (!p.passed()) {
      text << "      pair [" << generator_name(p.x) << "," << generator_name(p.y)
           << "] = " << format_combination(p.operator_side) << (p.in_span ? "" : " (outside the span)")
           << ", relations give " << format_combination(operator_bracket_table(p.x, p.y)) << "\n";
    }
  }
  text << text_line(module.first_failure() == nullptr, "so41.homomorphism",
                    std::to_string(good) + "/" + std::to_string(module.pairs.size()) +
                        " generator pairs satisfy [iso x, iso y] = iso [x, y]");
  s.passed = module.passed && table_ok;
  s.results = Json{{"n", config.n},
                   {"t_brackets", table_json},
                   {"image_rank", module.image_rank},
                   {"span_rank", module.span_rank},
                   {"pairs", pairs}};
  s.text = text.str();
  return s;
}

SuiteResult betti_suite(const RunConfig& config, const std::vector<Count>& values) {
  std::optional<HorizontalBettiSequence> bh;
  try {
    bh.emplace(config.n, values);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--bh: ") + e.what());
  }
  const BettiSequence b = betti_from_horizontal(*bh);
  const PoincareSeries series(b.values());
  const auto divisibility = check_divisibility(b);
  const auto bounds = check_bounds(b, config.n);
  const auto horizontal = check_horizontal_constraints(*bh);

  SuiteResult s;
  s.passed = divisibility.passed(config.strict) && bounds.passed(config.strict) && horizontal.passed(config.strict);
  s.results = Json{{"n", config.n},
                   {"horizontal", bh->values()},
                   {"betti", b.values()},
                   {"total", b.total()},
                   {"series", format_series(series)},
                   {"divisibility", to_json(divisibility)},
                   {"bounds", to_json(bounds)},
                   {"horizontal_constraints", to_json(horizontal)}};
  std::ostringstream text;
  text << "horizontal: " << format_sequence(bh->values()) << "\n";
  text << "betti: " << format_sequence(b.values()) << "\n";
  text << "total: " << b.total() << "\n";
  text << "series: " << format_series(series) << "\n";
  text << text_constraints("divisibility", divisibility, config.strict);
  text << text_constraints("bounds", bounds, config.strict);
  text << text_constraints("horizontal constraints", horizontal, config.strict);
  s.text = text.str();
  return s;
}

SuiteResult homology_suite(const RunConfig& config) {
  SuiteResult s;
  std::vector<Check> checks;
  std::optional<ChainComplexZ> complex;
  try {
    complex.emplace(ChainComplexZ::build(twist_for(config)));
  } catch (const BoundaryError& e) {
    checks.push_back(Check{"boundary_squared_zero", e.what(), false, false,
                           Json{{"cell", e.cell().name()}, {"face", e.face().name()}}});
  }
  Json results;
  std::ostringstream text;
  if (complex) {
    const Coefficients coefficients = config.integer ? Coefficients::integer : Coefficients::rational;
    const HomologyResult h = homology(*complex, coefficients);
    const HorizontalBettiSequence oracle = invariant_cohomology_oracle();
    const CrossCheckResult cross = cross_check(h, oracle);
    const BettiSequence b = h.betti_sequence();
    const Cell c35 = Cell::from_labels({3, 5});
    const Cell c3 = Cell::from_labels({3});
    const BigInt d35 = complex->degree(c35, c3);

    checks.push_back(Check{"boundary_squared_zero", "d_(k-1) d_k = 0 for every k", true});
    checks.push_back(Check{"degree_35_3", "degree({3,5},{3}) = 1", d35 == 1, true, Json{{"value", d35.str()}}});
    checks.push_back(Check{"connected", "b_0 = 1", b.at(0) == 1});
    checks.push_back(Check{"b2_below_21", "b_2 < 21", b.at(2) < 21, false, Json{{"b2", b.at(2)}}});
    checks.push_back(Check{"b2_not_25", "b_2 != 25", b.at(2) != 25, false, Json{{"b2", b.at(2)}}});
    checks.push_back(Check{"palindromic", "b_k = b_(7-k)", b.is_palindromic()});
    checks.push_back(Check{"euler_characteristic", "sum (-1)^k b_k = 0", b.euler_characteristic() == 0, false,
                           Json{{"value", b.euler_characteristic()}}});
    checks.push_back(Check{"cross_check", "homology equals the (1,3,3,1) transform of the invariant cohomology",
                           !cross.first_difference, false,
                           cross.first_difference ? Json{{"first_difference", *cross.first_difference}}
                                                  : Json::object()});
    const auto divisibility = check_divisibility(b);
    const auto bounds = check_bounds(b, 1);
    checks.push_back(Check{"divisibility", "b_(k-1) + b_k = 0 mod 4 for odd k", divisibility.passed()});
    checks.push_back(Check{"bounds", "b_k >= C(k+2,2) for k <= 3", bounds.passed()});

    Json degrees = Json::array();
    for (int k = 0; k <= ChainComplexZ::kTop; ++k) {
      Json d{{"k", k}, {"cells", h.chain_ranks[k]}, {"boundary_rank", h.boundary_ranks[k]}, {"betti", h.betti[k]}};
      if (config.integer) d["torsion"] = to_json(h.torsion[k]);
      degrees.push_back(d);
    }
    const bool product_like = !cross.not_torus || !cross.not_k3_product;
    results = Json{{"coefficients", config.integer ? "integer" : "rational"},
                   {"degrees", degrees},
                   {"betti", b.values()},
                   {"oracle_horizontal", oracle.values()},
                   {"oracle_betti", cross.from_oracle.values()},
                   {"degree_35_3", d35.str()},
                   {"euler_characteristic", b.euler_characteristic()},
                   {"verdict", product_like ? "consistent with a T^3 x hyper-Kahler product"
                                            : "not a T^3 x hyper-Kahler product cohomology"}};

    text << "cells:          " << format_sequence({h.chain_ranks.begin(), h.chain_ranks.end()}) << "\n";
    text << "boundary ranks: "
         << format_sequence({h.boundary_ranks.begin() + 1, h.boundary_ranks.begin() + ChainComplexZ::kTop + 1})
         << "\n";
    text << "betti:          " << format_sequence(b.values()) << "\n";
    if (config.integer) {
      for (int k = 0; k <= ChainComplexZ::kTop; ++k) {
        if (h.torsion[k].empty()) continue;
        text << "torsion H_" << k << ":     ";
        for (std::size_t i = 0; i < h.torsion[k].size(); ++i) text << (i ? "," : "") << h.torsion[k][i];
        text << "\n";
      }
    }
    text << "oracle b^h:     " << format_sequence(oracle.values()) << "\n";
    text << "oracle betti:   " << format_sequence(cross.from_oracle.values()) << "\n";
    text << "degree({3,5},{3}) = " << d35 << "\n";
    text << "euler characteristic = " << b.euler_characteristic() << "\n";
    text << "verdict: " << results["verdict"].get<std::string>() << "\n";
  }
  Json list = Json::array();
  s.passed = true;
  for (const auto& c : checks) {
    list.push_back(to_json(c));
    text << text_check(c);
    s.passed = s.passed && !c.fails(config.strict);
  }
  results["checks"] = list;
  s.results = std::move(results);
  s.text = text.str();
  return s;
}

std::vector<Count> torus_fixture(int n) {
  std::vector<Count> bh;
  for (int k = 0; k <= 4 * n; ++k) bh.push_back(binomial(4 * n, k));
  return bh;
}

}  // namespace

std::vector<Count> parse_sequence(const std::string& text) {
  std::vector<Count> out;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      const auto j = nlohmann::json::parse(text);
      for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("expected integers");
        out.push_back(v.get<Count>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed JSON sequence: ") + e.what());
    }
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    Count v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty sequence");
  return out;
}

CommandOutput cmd_verify_identities(const RunConfig& config) {
  auto s = identities_suite(config);
  return finish(config, s.passed, std::move(s.results), std::move(s.text));
}

CommandOutput cmd_so41(const RunConfig& config) {
  auto s = so41_suite(config);
  return finish(config, s.passed, std::move(s.results), std::move(s.text));
}

CommandOutput cmd_betti(const RunConfig& config) {
  if (!config.bh_given) throw UsageError("betti needs --bh");
  auto s = betti_suite(config, config.bh);
  return finish(config, s.passed, std::move(s.results), std::move(s.text));
}

CommandOutput cmd_homology(const RunConfig& config) {
  auto s = homology_suite(config);
  return finish(config, s.passed, std::move(s.results), std::move(s.text));
}

CommandOutput cmd_report(const RunConfig& config) {
  std::vector<std::pair<std::string, SuiteResult>> suites;
  suites.emplace_back("verify-identities", identities_suite(config));
  if (config.n >= 1) suites.emplace_back("so41-check", so41_suite(config));
  suites.emplace_back("betti.torus", betti_suite(config, torus_fixture(config.n)));
  {
    RunConfig one = config;
    one.n = 1;
    suites.emplace_back("betti.example", betti_suite(one, invariant_cohomology_oracle().values()));
  }
  suites.emplace_back("homology", homology_suite(config));

  bool passed = true;
  Json results = Json::object();
  std::string text;
  for (auto& [name, s] : suites) {
    passed = passed && s.passed;
    results[name] = Json{{"status", s.passed ? "pass" : "fail"}, {"results", std::move(s.results)}};
    text += "== " + name + " (" + (s.passed ? "pass" : "fail") + ")\n" + s.text;
  }
  return finish(config, passed, std::move(results), std::move(text));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the operator algebra and Betti constraints of 3-cosymplectic manifolds",
               "cosym"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  RunConfig config;
  std::string bh_text;
  std::string inject_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "quaternionic rank (0..3)")->check(CLI::Range(0, 3));
    sub->add_flag("--json", config.json, "machine-readable output");
    sub->add_flag("--strict", config.strict, "treat warnings as failures");
    sub->add_option("--inject", inject_text, "fault injection for negative controls")
        ->check(CLI::IsMember({"phi-star-sign", "twist-sign", "k3-sign"}))
        ->group("");
  };
  auto* verify = app.add_subcommand("verify-identities", "check every operator identity of the flat model");
  auto* so41 = app.add_subcommand("so41-check", "check the so(4,1) module structure");
  auto* betti = app.add_subcommand("betti", "Betti numbers from horizontal Betti numbers, with constraints");
  auto* homology_cmd = app.add_subcommand("homology", "cellular homology of M^7_f and its cross-check");
  auto* report = app.add_subcommand("report", "run every suite");
  for (auto* sub : {verify, so41, betti, homology_cmd, report}) common(sub);
  betti->add_option("--bh", bh_text, "horizontal Betti numbers b^h_0..b^h_4n, comma separated or a JSON array")
      ->required();
  homology_cmd->add_flag("--integer", config.integer, "integral homology with torsion");
  report->add_flag("--integer", config.integer, "integral homology with torsion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (inject_text == "phi-star-sign") config.inject = Injection::phi_star_sign;
  if (inject_text == "twist-sign") config.inject = Injection::twist_sign;
  if (inject_text == "k3-sign") config.inject = Injection::k3_sign;

  try {
    if (!bh_text.empty()) {
      try {
        config.bh = parse_sequence(bh_text);
        config.bh_given = true;
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--bh: ") + e.what());
      }
    }
    CommandOutput result;
    if (config.command == "verify-identities") result = cmd_verify_identities(config);
    if (config.command == "so41-check") result = cmd_so41(config);
    if (config.command == "betti") result = cmd_betti(config);
    if (config.command == "homology") result = cmd_homology(config);
    if (config.command == "report") result = cmd_report(config);
    out << (config.json ? result.json : result.text);
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "cosym: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "cosym: internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace cosym::cli
