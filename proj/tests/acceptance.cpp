// One line per acceptance criterion; exit status 1 when any selected criterion fails.
// Usage: acceptance [--criterion N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "mcg/closure.hpp"
#include "mcg/error.hpp"
#include "mcg/fixtures.hpp"
#include "mcg/homology.hpp"
#include "mcg/involutions.hpp"
#include "mcg/nec.hpp"
#include "mcg/polygon.hpp"

using namespace mcg;

namespace {

// Pinned limits.
constexpr int kHrGenusMax = 20;
constexpr double kHrSecondsLimit = 300.0;
constexpr int kDichotomyGenusMin = 5, kDichotomyGenusMax = 16;
constexpr int kDeterminantGenusMax = 20;
constexpr int kRotationGenusMin = 7, kRotationGenusMax = 20;
constexpr int kCrossCountGenusMin = 5, kCrossCountGenusMax = 12;
constexpr int kStabilityQuotientGenusMax = 3;
constexpr double kFixturePassRate = 1.0;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string profile_text(const TrivialityProfile& p) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  return std::string("(") + b(p.on_vg) + "," + b(p.on_vg_plus) + "," + (p.on_quotient_opt ? b(*p.on_quotient_opt) : "-") + ")";
}

Outcome hurwitz_riemann() {
  const auto start = std::chrono::steady_clock::now();
  long long domains = 0, mismatches = 0;
  std::string first;
  for (int n : {2, 3, 4, 5})
    for (int g = 1; g <= kHrGenusMax; ++g)
      for (const auto& sig : enumerate_signatures(g, n))
        for (const auto& theta : enumerate_epimorphisms(sig, n)) {
          int unit = 1;
          for (const auto& [name, v] : theta.images)
            if (std::gcd(v, n) == 1) {
              unit = v;
              break;
            }
          const auto c = classify(assemble_fundamental_domain(sig, theta, unit));
          ++domains;
          if (c.orientable || c.genus != hurwitz_riemann_genus(sig, n)) {
            if (!mismatches++) first = to_string(sig) + " n=" + std::to_string(n);
          }
        }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%lld domains, %lld mismatches, %.1f s (limit %.0f s)", domains, mismatches, secs,
                kHrSecondsLimit);
  return {mismatches == 0 && secs < kHrSecondsLimit, buf + (first.empty() ? "" : "; first " + first)};
}

Outcome worked_examples() {
  int checked = 0;
  std::string bad;
  for (int g : {6, 8, 10}) {
    const std::vector<std::pair<InvolutionClass, TrivialityProfile>> cases = {
        {make_class(Family::F3, g, 0, 2, g / 2, 0), {true, true, true}},
        {make_class(Family::F1, g, 1, g, 0, 0), {false, true, true}},
        {make_class(Family::F6, g, 2, 0, (g - 2) / 2, 0), {false, false, true}},
    };
    for (const auto& [c, want] : cases) {
      const auto a = induced_z2_action(c);
      const auto got = triviality_profile(a.matrix, a.layout);
      ++checked;
      if (got != want) bad += " " + to_string(c) + "=" + profile_text(got);
    }
  }
  return {bad.empty(), std::to_string(checked) + " profiles at g=6,8,10" + (bad.empty() ? ", all exact" : ";" + bad)};
}

Outcome dichotomy() {
  int classes = 0;
  std::vector<std::string> bad;
  for (int g = kDichotomyGenusMin; g <= kDichotomyGenusMax; ++g)
    for (const auto& c : enumerate_classes(g)) {
      ++classes;
      const auto a = induced_z2_action(c);
      const auto p = triviality_profile(a.matrix, a.layout);
      const bool nontrivial_everywhere = !p.on_vg && !p.on_vg_plus && !p.on_quotient_opt.value_or(false);
      if (decide_involution(c) != nontrivial_everywhere) bad.push_back(to_string(c) + " " + profile_text(p));
    }
  std::string detail = std::to_string(classes) + " classes, " + std::to_string(bad.size()) + " exceptions";
  for (const auto& b : bad) detail += "; " + b;
  return {bad.empty(), detail};
}

Outcome determinant() {
  int tuples = 0, bad = 0;
  for (int g = 5; g <= kDeterminantGenusMax; ++g)
    for (int h = 1; 2 * h <= g; ++h)
      for (int r = 0; r <= g; ++r)
        for (int km = 1; km <= g; ++km) {
          try {
            make_class(Family::F4, g, h, r, 0, km);
          } catch (const Error&) {
            continue;
          }
          ++tuples;
          if (bareiss_determinant(f4_variant_real_action(g, h, r, km)) != (h % 2 ? -1 : 1)) ++bad;
        }
  return {bad == 0 && tuples > 0, std::to_string(tuples) + " tuples with g<=20, " + std::to_string(bad) + " wrong"};
}

Outcome rotation_generators() {
  std::string bad;
  for (int g = kRotationGenusMin; g <= kRotationGenusMax; ++g) {
    // oracle: sign of the crosscap permutation, counted by inversions
    const int len = g % 2 == 0 ? g : g - 1;
    int inversions = 0;
    std::vector<int> perm(g);
    for (int i = 0; i < g; ++i) perm[i] = i < len ? (i + 1) % len : i;
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j) inversions += perm[i] > perm[j];
    const int sign = inversions % 2 ? -1 : 1;
    const auto m = rotation_generator_action(g);
    const auto det = bareiss_determinant(m);
    if (det != -1 || det != sign || !is_normal_generator(g, len, static_cast<int>(det))) bad += " rotation g=" + std::to_string(g);
    try {
      const auto w = normal_generator_witness(g);
      const auto wdet = bareiss_determinant(f4_variant_real_action(g, w.quotient_genus, w.isolated_points, w.one_sided_ovals));
      if (w.genus != g || !decide_involution(w) || !is_normal_generator(w) || wdet != -1) bad += " witness g=" + std::to_string(g);
    } catch (const Error&) {
      bad += " no witness g=" + std::to_string(g);
    }
  }
  return {bad.empty(), "g=7..20 rotations det -1 and witnesses verified" + (bad.empty() ? "" : ";" + bad)};
}

Outcome stability() {
  long long checks = 0, bad = 0;
  auto run = [&](const NecSignature& sig, int n) {
    for (const auto& t : enumerate_epimorphisms(sig, n)) {
      const auto inv = conjugacy_invariants(sig, t);
      for (const auto& aut : applicable_automorphisms(sig)) {
        ++checks;
        if (conjugacy_invariants(sig, apply_automorphism(sig, t, aut)) != inv) ++bad;
      }
    }
  };
  for (int p : {3, 5})
    for (int h = 1; h <= kStabilityQuotientGenusMax; ++h)
      for (int r = 0; r <= 4; ++r) run(NecSignature::make(h, Sign::minus, std::vector<int>(r, p), 0), p);
  for (Sign s : {Sign::minus, Sign::plus})
    for (int h = 0; h <= kStabilityQuotientGenusMax; ++h)
      for (int r = 0; r <= 5; ++r)
        for (int k = 0; r + k <= 5; ++k) {
          if ((s == Sign::minus && h == 0) || (s == Sign::plus && k == 0)) continue;
          run(NecSignature::make(h, s, std::vector<int>(r, 2), k), 2);
        }
  return {bad == 0 && checks > 0, std::to_string(checks) + " (theta, automorphism) pairs, " + std::to_string(bad) + " changed"};
}

Outcome cross_count() {
  std::string detail, bad;
  for (int g = kCrossCountGenusMin; g <= kCrossCountGenusMax; ++g) {
    std::set<std::pair<NecSignature, ConjugacyInvariants>> buckets;
    for (const auto& sig : enumerate_signatures(g, 2))
      for (const auto& t : enumerate_epimorphisms(sig, 2)) buckets.insert({sig, conjugacy_invariants(sig, t)});
    const auto tuples = enumerate_classes(g).size();
    detail += (detail.empty() ? "" : " ") + std::to_string(buckets.size());
    if (buckets.size() != tuples)
      bad += " g=" + std::to_string(g) + ":" + std::to_string(buckets.size()) + "!=" + std::to_string(tuples);
  }
  return {bad.empty(), "classes for g=5..12: " + detail + (bad.empty() ? ", equal to the taxonomy" : ";" + bad)};
}

Outcome fixture_corpus() {
  const auto results = check_fixtures(load_fixture_dir(MCG_FIXTURE_DIR));
  int passed = 0;
  std::string bad;
  for (const auto& r : results) {
    if (r.passed())
      ++passed;
    else
      bad += " " + r.name;
  }
  const double rate = results.empty() ? 0.0 : static_cast<double>(passed) / results.size();
  return {!results.empty() && rate >= kFixturePassRate,
          std::to_string(passed) + "/" + std::to_string(results.size()) + " fixtures" + bad};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) only = std::atoi(argv[2]);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hurwitz-Riemann consistency of assembled domains", hurwitz_riemann},
      {"worked triviality profiles", worked_examples},
      {"closure decision vs triviality dichotomy", dichotomy},
      {"determinant of the k+=0 variant", determinant},
      {"rotation generators and normal-generator witnesses", rotation_generators},
      {"conjugacy invariants under automorphisms", stability},
      {"taxonomy vs epimorphism cross-count", cross_count},
      {"standard-pair fixture corpus", fixture_corpus},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "usage: acceptance [--criterion 1..%zu]\n", criteria.size());
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  return all ? 0 : 1;
}
