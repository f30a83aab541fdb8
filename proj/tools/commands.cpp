#include "commands.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mcg/closure.hpp"
#include "mcg/error.hpp"
#include "mcg/involutions.hpp"
#include "mcg/nec.hpp"
#include "mcg/verify.hpp"
#include "table.hpp"

#ifndef MCG_FIXTURE_DIR
#define MCG_FIXTURE_DIR "fixtures"
#endif

namespace mcg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int genus_min = 5;
  std::optional<int> genus_max;
  std::vector<int> orders;
  Format format = Format::text;
  long long budget = static_cast<long long>(default_enumeration_budget);
  std::string fixtures = MCG_FIXTURE_DIR;

  int max_or(int fallback) const { return genus_max.value_or(fallback); }
  std::uint64_t enumeration_budget() const { return static_cast<std::uint64_t>(budget); }
};

void validate(RunConfig& cfg) {
  if (const char* env = std::getenv("MCG_BUDGET")) {
    try {
      std::size_t used = 0;
      cfg.budget = std::stoll(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MCG_BUDGET is not an integer: ") + env);
    }
  }
  if (cfg.budget <= 0) throw UsageError("budget must be positive");
  if (cfg.genus_min < 5) throw UsageError("genus must be at least 5");
  if (cfg.genus_max && *cfg.genus_max < cfg.genus_min) throw UsageError("--genus-max is below --genus");
}

std::string images_text(const Epimorphism& theta) {
  std::string s;
  for (const auto& [name, v] : theta.images) s += (s.empty() ? "" : " ") + name + "=" + std::to_string(v);
  return s;
}

std::string invariant_text(const ConjugacyInvariants& inv) {
  if (const auto* p = std::get_if<OddPrimeInvariant>(&inv)) {
    std::string s = "[";
    for (std::size_t i = 0; i < p->canonical.size(); ++i) s += (i ? "," : "") + std::to_string(p->canonical[i]);
    return s + "]";
  }
  const auto& q = std::get<Order2Invariant>(inv);
  std::string s = "k-=" + std::to_string(q.one_sided_ovals);
  if (q.glide_sum) s += " glide_sum=" + std::to_string(*q.glide_sum);
  if (q.glides_all_zero) s += std::string(" glides_zero=") + (*q.glides_all_zero ? "true" : "false");
  return s;
}

Table signatures_table(const RunConfig& cfg) {
  Table t;
  t.command = "signatures";
  t.columns = {"genus", "order", "signature", "images", "invariant", "epimorphisms"};
  const auto orders = cfg.orders.empty() ? std::vector<int>{2} : cfg.orders;
  for (int g = cfg.genus_min; g <= cfg.max_or(cfg.genus_min); ++g)
    for (int n : orders)
      for (const auto& sig : enumerate_signatures(g, n)) {
        struct Row {
          Epimorphism first;
          std::string invariant;
          int count = 0;
        };
        std::vector<Row> rows;
        std::map<std::string, std::size_t> bucket;
        for (const auto& theta : enumerate_epimorphisms(sig, n, cfg.enumeration_budget())) {
          std::optional<std::string> key;
          try {
            key = invariant_text(conjugacy_invariants(sig, theta));
          } catch (const Error& e) {
            if (e.code() != Errc::unsupported_family) throw;
          }
          if (key && bucket.count(*key)) {
            ++rows[bucket[*key]].count;
            continue;
          }
          if (key) bucket[*key] = rows.size();
          rows.push_back({theta, key.value_or("-"), 1});
        }
        for (const auto& r : rows) {
          const int genus = hurwitz_riemann_genus(sig, n);
          t.rows.push_back({std::to_string(genus), std::to_string(n), to_string(sig), images_text(r.first),
                            r.invariant, std::to_string(r.count)});
          nlohmann::ordered_json j;
          j["genus"] = genus;
          j["order"] = n;
          j["signature"] = to_string(sig);
          j["images"] = r.first.images;
          j["invariant"] = r.invariant;
          j["epimorphisms"] = r.count;
          t.json_rows.push_back(j);
        }
      }
  return t;
}

Table involutions_table(const RunConfig& cfg, bool only_normal_generators) {
  Table t;
  t.command = "involutions";
  t.columns = {"class", "contains_commutator", "closure", "clause", "normal_generator", "warning"};
  for (int g = cfg.genus_min; g <= cfg.max_or(cfg.genus_min); ++g)
    for (const auto& c : enumerate_classes(g)) {
      const auto v = involution_verdict(c);
      const bool normal = g >= 7 && is_normal_generator(c);
      if (only_normal_generators && !normal) continue;
      const std::string closure(closure_code(v.closure_id));
      t.rows.push_back({to_string(c), v.contains_commutator ? "true" : "false", closure, v.clause,
                        normal ? "true" : "false", v.warning.value_or("")});
      nlohmann::ordered_json j;
      j["class"] = to_string(c);
      j["family"] = std::string(to_string(c.family));
      j["genus"] = c.genus;
      j["verdict"] = {{"contains_commutator", v.contains_commutator}, {"closure", closure}, {"clause", v.clause}};
      j["normal_generator"] = normal;
      j["warning"] = v.warning ? nlohmann::ordered_json(*v.warning) : nlohmann::ordered_json(nullptr);
      t.json_rows.push_back(j);
    }
  return t;
}

SuiteReport run_suite(const std::string& suite, const RunConfig& cfg) {
  if (suite == "hr") {
    const auto orders = cfg.orders.empty() ? std::vector<int>{2, 3, 4, 5} : cfg.orders;
    return verify_hurwitz_riemann(cfg.genus_min, cfg.max_or(20), orders, cfg.enumeration_budget());
  }
  if (suite == "homology") return verify_homology(cfg.genus_min, cfg.max_or(20));
  if (suite == "conjugacy") return verify_conjugacy(cfg.genus_min, cfg.max_or(12), cfg.enumeration_budget());
  if (suite == "dichotomy") return verify_dichotomy(cfg.genus_min, cfg.max_or(16));
  return verify_fixture_dir(cfg.fixtures);
}

Table report_table(const SuiteReport& r) {
  Table t;
  t.command = "verify";
  t.columns = {"suite", "result", "checked", "failure"};
  const std::string result = r.passed() ? "pass" : "fail";
  if (r.failures.empty()) t.rows.push_back({r.suite, result, std::to_string(r.checked), ""});
  for (const auto& f : r.failures) t.rows.push_back({r.suite, result, std::to_string(r.checked), f});
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  t.json_rows.push_back(j);
  return t;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic maps of non-orientable surfaces: enumeration, classification and checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string suite;
  bool only_normal = false;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};

  auto common = [&](CLI::App* sub, bool with_orders) {
    sub->add_option("--genus", cfg.genus_min, "genus, or lower end of the range")->capture_default_str();
    sub->add_option("--genus-max", cfg.genus_max, "upper end of the genus range");
    if (with_orders) sub->add_option("--order", cfg.orders, "cyclic orders (repeatable)");
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--budget", cfg.budget, "bound on enumerated epimorphism candidates");
  };
  auto* sigs = app.add_subcommand("signatures", "admissible signatures and epimorphism classes");
  common(sigs, true);
  auto* invs = app.add_subcommand("involutions", "involution classes with closure verdicts");
  common(invs, false);
  invs->add_flag("--only-normal-generators", only_normal, "keep classes normally generating the group");
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  common(ver, true);
  ver->add_option("--suite", suite, "hr, homology, conjugacy, fixtures or dichotomy")
      ->required()
      ->check(CLI::IsMember({"hr", "homology", "conjugacy", "fixtures", "dichotomy"}));
  ver->add_option("--fixtures", cfg.fixtures, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    validate(cfg);
    if (sigs->parsed()) {
      render(signatures_table(cfg), cfg.format, out);
      return 0;
    }
    if (invs->parsed()) {
      render(involutions_table(cfg, only_normal), cfg.format, out);
      return 0;
    }
    const auto report = run_suite(suite, cfg);
    render(report_table(report), cfg.format, out);
    return report.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::genus_too_small || e.code() == Errc::invalid_parameters ? 2 : 1;
  }
}

}  // namespace mcg::cli
