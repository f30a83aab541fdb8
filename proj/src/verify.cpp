#include "mcg/verify.hpp"

#include <future>
#include <map>
#include <numeric>
#include <set>

#include "mcg/closure.hpp"
#include "mcg/error.hpp"
#include "mcg/fixtures.hpp"
#include "mcg/homology.hpp"
#include "mcg/involutions.hpp"
#include "mcg/polygon.hpp"

namespace mcg {

namespace {

// Runs per-genus work concurrently and concatenates the reports in genus order.
template <class F>
SuiteReport per_genus(const std::string& name, int genus_min, int genus_max, F work) {
  std::vector<std::future<SuiteReport>> jobs;
  for (int g = genus_min; g <= genus_max; ++g) jobs.push_back(std::async(std::launch::async, work, g));
  SuiteReport out{name, 0, {}};
  for (auto& j : jobs) {
    auto r = j.get();
    out.checked += r.checked;
    out.failures.insert(out.failures.end(), r.failures.begin(), r.failures.end());
  }
  return out;
}

std::string profile_text(const TrivialityProfile& p) {
  auto bit = [](bool b) { return b ? "true" : "false"; };
  return std::string("(") + bit(p.on_vg) + "," + bit(p.on_vg_plus) + "," +
         (p.on_quotient_opt ? bit(*p.on_quotient_opt) : "-") + ")";
}

// Generator whose image is a unit, to serve as the deck generator.
std::string unit_generator(const Epimorphism& theta) {
  for (const auto& [name, v] : theta.images)
    if (std::gcd(v, theta.order) == 1) return name;
  throw Error(Errc::generator_not_primitive, "no generator maps to a unit");
}

}  // namespace

SuiteReport verify_hurwitz_riemann(int genus_min, int genus_max, const std::vector<int>& orders,
                                   std::uint64_t budget) {
  return per_genus("hr", genus_min, genus_max, [&](int g) {
    SuiteReport r;
    for (int n : orders)
      for (const auto& sig : enumerate_signatures(g, n))
        for (const auto& theta : enumerate_epimorphisms(sig, n, budget)) {
          ++r.checked;
          const auto glued = assemble_fundamental_domain(sig, theta, unit_generator(theta));
          const auto c = classify(glued);
          if (c.orientable || c.genus != g || hurwitz_riemann_genus(sig, n) != g)
            r.failures.push_back(to_string(sig) + " n=" + std::to_string(n) + " g=" + std::to_string(g) +
                                 ": domain genus " + std::to_string(c.genus));
        }
    return r;
  });
}

SuiteReport verify_homology(int genus_min, int genus_max) {
  auto report = per_genus("homology", genus_min, genus_max, [](int g) {
    SuiteReport r;
    for (const auto& c : enumerate_classes(g)) {
      ++r.checked;
      try {
        const auto a = induced_z2_action(c);
        check_structure(a.matrix, a.layout);
        const auto p = triviality_profile(a.matrix, a.layout);
        const bool q = p.on_quotient_opt.value_or(p.on_vg_plus);
        if ((p.on_vg && !p.on_vg_plus) || (p.on_vg_plus && !q))
          r.failures.push_back(to_string(c) + ": profile not monotone " + profile_text(p));
      } catch (const Error& e) {
        r.failures.push_back(to_string(c) + ": " + e.what());
      }
    }
    for (int h = 1; 2 * h <= g; ++h)
      for (int rr = 0; rr <= g; ++rr)
        for (int km = 1; km <= g; ++km) {
          try {
            make_class(Family::F4, g, h, rr, 0, km);
          } catch (const Error&) {
            continue;
          }
          ++r.checked;
          const auto m = f4_variant_real_action(g, h, rr, km);
          const auto det = bareiss_determinant(m);
          if (det != (h % 2 == 0 ? 1 : -1) || m * m != IntegerMatrix::Identity(g - 1, g - 1))
            r.failures.push_back("k+=0 variant g=" + std::to_string(g) + " h=" + std::to_string(h) +
                                 " r=" + std::to_string(rr) + " k-=" + std::to_string(km) + ": det " +
                                 std::to_string(det));
        }
    if (g >= 7) {
      ++r.checked;
      const auto m = rotation_generator_action(g);
      const int order = g % 2 == 0 ? g : g - 1;
      if (bareiss_determinant(m) != -1 || matrix_order(m, 2 * g) != order ||
          !is_normal_generator(g, order, determinant_hom(m).determinant))
        r.failures.push_back("rotation generator g=" + std::to_string(g));
      ++r.checked;
      try {
        const auto w = normal_generator_witness(g);
        const auto det =
            bareiss_determinant(f4_variant_real_action(g, w.quotient_genus, w.isolated_points, w.one_sided_ovals));
        if (!is_normal_generator(w) || det != -1) r.failures.push_back("witness " + to_string(w));
      } catch (const Error& e) {
        r.failures.push_back(std::string("witness g=") + std::to_string(g) + ": " + e.what());
      }
    }
    return r;
  });

  // Worked examples: reflection with blown-up ovals, rotation with one 2-orbit,
  // reflection with two 2-orbits.
  for (int g : {6, 8, 10}) {
    const std::vector<std::pair<InvolutionClass, std::string>> cases = {
        {make_class(Family::F3, g, 0, 2, g / 2, 0), "(true,true,true)"},
        {make_class(Family::F1, g, 1, g, 0, 0), "(false,true,true)"},
        {make_class(Family::F6, g, 2, 0, (g - 2) / 2, 0), "(false,false,true)"},
    };
    for (const auto& [c, expected] : cases) {
      ++report.checked;
      const auto a = induced_z2_action(c);
      const auto got = profile_text(triviality_profile(a.matrix, a.layout));
      if (got != expected) report.failures.push_back(to_string(c) + ": " + got + " expected " + expected);
    }
  }
  return report;
}

SuiteReport verify_conjugacy(int genus_min, int genus_max, std::uint64_t budget) {
  SuiteReport report{"conjugacy", 0, {}};
  auto stable = [&](const NecSignature& sig, int n) {
    for (const auto& theta : enumerate_epimorphisms(sig, n, budget)) {
      const auto inv = conjugacy_invariants(sig, theta);
      for (const auto& aut : applicable_automorphisms(sig)) {
        ++report.checked;
        if (conjugacy_invariants(sig, apply_automorphism(sig, theta, aut)) != inv)
          report.failures.push_back(to_string(sig) + " n=" + std::to_string(n) + ": " + to_string(aut) +
                                    " changes the invariants");
      }
    }
  };
  for (int p : {3, 5})
    for (int h = 1; h <= 3; ++h)
      for (int r = 0; r <= 4; ++r) stable(NecSignature::make(h, Sign::minus, std::vector<int>(r, p), 0), p);
  for (Sign sign : {Sign::minus, Sign::plus})
    for (int h = 0; h <= 3; ++h)
      for (int r = 0; r <= 5; ++r)
        for (int k = 0; r + k <= 5; ++k) {
          if (sign == Sign::minus && h == 0) continue;
          if (sign == Sign::plus && k == 0) continue;
          stable(NecSignature::make(h, sign, std::vector<int>(r, 2), k), 2);
        }

  auto counts = per_genus("conjugacy", genus_min, genus_max, [&](int g) {
    SuiteReport r;
    ++r.checked;
    std::set<std::pair<NecSignature, ConjugacyInvariants>> buckets;
    std::set<InvolutionClass> from_epimorphisms;
    for (const auto& sig : enumerate_signatures(g, 2))
      for (const auto& theta : enumerate_epimorphisms(sig, 2, budget)) {
        buckets.insert({sig, conjugacy_invariants(sig, theta)});
        from_epimorphisms.insert(involution_class_of(sig, theta));
      }
    const auto classes = enumerate_classes(g);
    const std::set<InvolutionClass> taxonomy(classes.begin(), classes.end());
    if (buckets.size() != classes.size() || from_epimorphisms != taxonomy)
      r.failures.push_back("g=" + std::to_string(g) + ": " + std::to_string(buckets.size()) +
                           " invariant buckets, " + std::to_string(classes.size()) + " taxonomy classes");
    return r;
  });
  report.checked += counts.checked;
  report.failures.insert(report.failures.end(), counts.failures.begin(), counts.failures.end());
  return report;
}

SuiteReport verify_dichotomy(int genus_min, int genus_max) {
  return per_genus("dichotomy", genus_min, genus_max, [](int g) {
    SuiteReport r;
    for (const auto& c : enumerate_classes(g)) {
      ++r.checked;
      const auto a = induced_z2_action(c);
      const auto p = triviality_profile(a.matrix, a.layout);
      if (decide_involution(c) == p.any())
        r.failures.push_back(to_string(c) + ": decide=" + (decide_involution(c) ? "true" : "false") +
                             " profile=" + profile_text(p));
    }
    return r;
  });
}

SuiteReport verify_fixture_dir(const std::filesystem::path& dir) {
  SuiteReport report{"fixtures", 0, {}};
  const auto fixtures = load_fixture_dir(dir);
  if (fixtures.empty()) report.failures.push_back("no fixtures in " + dir.string());
  for (const auto& res : check_fixtures(fixtures)) {
    ++report.checked;
    if (!res.passed())
      report.failures.push_back(res.name + ": expected " + std::string(to_string(res.expected)) + ", got " +
                                (res.error ? *res.error : std::string(to_string(res.actual))));
  }
  return report;
}

}  // namespace mcg
