#include "mcg/nec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg {

namespace {

int mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int element_order(int v, int n) { return n / std::gcd(mod(v, n), n); }

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string name_of(char prefix, int index) { return prefix + std::to_string(index); }

}  // namespace

NecSignature NecSignature::make(int quotient_genus, Sign sign, std::vector<int> periods,
                                int cycles) {
  if (quotient_genus < 0 || cycles < 0)
    throw Error(Errc::invalid_signature, "negative genus or cycle count");
  for (int m : periods)
    if (m < 2) throw Error(Errc::invalid_signature, "period below 2");
  if (sign == Sign::plus && quotient_genus == 0 && periods.empty() && cycles == 0)
    throw Error(Errc::invalid_signature, "(0;+;[];{}) has no group");
  // a non-orientable quotient has genus at least one
  if (sign == Sign::minus && quotient_genus == 0)
    throw Error(Errc::invalid_signature, "non-orientable quotient of genus 0");
  std::sort(periods.begin(), periods.end());
  return NecSignature{quotient_genus, sign, std::move(periods), cycles};
}

std::string to_string(const NecSignature& sig) {
  std::ostringstream out;
  out << '(' << sig.quotient_genus << ';' << (sig.sign == Sign::plus ? '+' : '-') << ";[";
  for (std::size_t i = 0; i < sig.periods.size(); ++i) out << (i ? "," : "") << sig.periods[i];
  out << "];{";
  if (sig.cycles == 1) out << "()";
  if (sig.cycles > 1) out << "()^" << sig.cycles;
  out << "})";
  return out.str();
}

NecSignature parse_signature(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  static const std::regex shape(R"(\((\d+);([+-]);\[([0-9,]*)\];\{(.*)\}\))");
  std::smatch m;
  if (!std::regex_match(s, m, shape)) throw Error(Errc::parse_error, "bad signature: " + s);

  std::vector<int> periods;
  std::string list = m[3];
  if (!list.empty()) {
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw Error(Errc::parse_error, "empty period in " + s);
      periods.push_back(std::stoi(item));
    }
  }

  std::string cyc = m[4];
  int cycles = 0;
  static const std::regex power(R"(\(\)\^(\d+))");
  static const std::regex listed(R"(\(\)(,\(\))*)");
  std::smatch cm;
  if (cyc.empty() || cyc == "-") {
    cycles = 0;
  } else if (std::regex_match(cyc, cm, power)) {
    cycles = std::stoi(cm[1]);
  } else if (std::regex_match(cyc, listed)) {
    cycles = static_cast<int>(std::count(cyc.begin(), cyc.end(), '('));
  } else {
    throw Error(Errc::parse_error, "bad period cycles: " + cyc);
  }
  return NecSignature::make(std::stoi(m[1]), m[2] == "+" ? Sign::plus : Sign::minus,
                            std::move(periods), cycles);
}

bool orientation_reversing(GeneratorKind kind) {
  return kind == GeneratorKind::reflection || kind == GeneratorKind::glide;
}

std::optional<std::size_t> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return i;
  return std::nullopt;
}

Presentation presentation(const NecSignature& sig) {
  Presentation p;
  auto add = [&](char prefix, GeneratorKind kind, int index) {
    p.generators.push_back({name_of(prefix, index), kind, index});
    return p.generators.size() - 1;
  };
  std::vector<std::size_t> xs, es;
  for (int i = 1; i <= sig.period_count(); ++i) xs.push_back(add('x', GeneratorKind::elliptic, i));
  for (int j = 1; j <= sig.cycles; ++j) add('c', GeneratorKind::reflection, j);
  for (int j = 1; j <= sig.cycles; ++j) es.push_back(add('e', GeneratorKind::connector, j));

  for (auto x : xs) p.long_relation.push_back({x, 1});
  for (auto e : es) p.long_relation.push_back({e, 1});
  for (int l = 1; l <= sig.quotient_genus; ++l) {
    if (sig.sign == Sign::plus) {
      auto a = add('a', GeneratorKind::handle_a, l);
      auto b = add('b', GeneratorKind::handle_b, l);
      p.long_relation.insert(p.long_relation.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    } else {
      auto d = add('d', GeneratorKind::glide, l);
      p.long_relation.push_back({d, 2});
    }
  }
  return p;
}

int Epimorphism::image(const std::string& name) const {
  auto it = images.find(name);
  if (it == images.end()) throw Error(Errc::signature_mismatch, "no image for " + name);
  return it->second;
}

int hurwitz_riemann_genus(const NecSignature& sig, int order) {
  if (order < 1) throw Error(Errc::invalid_parameters, "order must be positive");
  const long long eps = sig.sign == Sign::minus ? 1 : 2;
  long long den = 1;
  for (int m : sig.periods) den = std::lcm(den, static_cast<long long>(m));
  // (g - 2) * den = n * (den * (eps h + k - 2) + sum(den - den / m))
  long long num = den * (eps * sig.quotient_genus + sig.cycles - 2);
  for (int m : sig.periods) num += den - den / m;
  num *= order;
  if (num % den != 0) throw Error(Errc::non_integral_genus, to_string(sig));
  long long g = num / den + 2;
  if (g < 1) throw Error(Errc::not_a_surface, to_string(sig) + " gives genus " + std::to_string(g));
  return static_cast<int>(g);
}

namespace {

// Flat view of theta aligned with the presentation.
std::vector<int> aligned_images(const Presentation& p, const Epimorphism& theta) {
  if (theta.images.size() != p.generators.size())
    throw Error(Errc::signature_mismatch, "generator count differs");
  std::vector<int> v;
  v.reserve(p.generators.size());
  for (const auto& gen : p.generators) {
    auto it = theta.images.find(gen.name);
    if (it == theta.images.end()) throw Error(Errc::signature_mismatch, "missing " + gen.name);
    v.push_back(mod(it->second, theta.order));
  }
  return v;
}

Epimorphism from_aligned(const Presentation& p, int n, const std::vector<int>& v) {
  Epimorphism theta{n, {}};
  for (std::size_t i = 0; i < v.size(); ++i) theta.images.emplace(p.generators[i].name, mod(v[i], n));
  return theta;
}

bool relations_hold(const NecSignature& sig, const Presentation& p, int n, const std::vector<int>& v) {
  long long sum = 0;
  for (const auto& letter : p.long_relation) sum += static_cast<long long>(letter.exponent) * v[letter.generator];
  if (mod(sum, n) != 0) return false;
  int span = n;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& gen = p.generators[i];
    if (gen.kind == GeneratorKind::elliptic && mod(static_cast<long long>(sig.periods[gen.index - 1]) * v[i], n) != 0)
      return false;
    if (gen.kind == GeneratorKind::reflection && mod(2LL * v[i], n) != 0) return false;
    span = std::gcd(span, v[i]);
  }
  return span == 1;
}

bool lemma_conditions(const NecSignature& sig, const Presentation& p, int n, const std::vector<int>& v) {
  if (!sig.has_reversing_generator()) return false;
  int span = n;
  std::vector<int> reversing;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& gen = p.generators[i];
    if (gen.kind == GeneratorKind::elliptic && element_order(v[i], n) != sig.periods[gen.index - 1])
      return false;
    if (gen.kind == GeneratorKind::reflection && element_order(v[i], n) != 2) return false;
    if (orientation_reversing(gen.kind))
      reversing.push_back(v[i]);
    else
      span = std::gcd(span, v[i]);
  }
  for (std::size_t i = 0; i < reversing.size() && span != 1; ++i)
    for (std::size_t j = i; j < reversing.size(); ++j) span = std::gcd(span, mod(reversing[i] + reversing[j], n));
  return span == 1;
}

}  // namespace

bool satisfies_relations(const NecSignature& sig, const Epimorphism& theta) {
  if (theta.order < 1) return false;
  auto p = presentation(sig);
  return relations_hold(sig, p, theta.order, aligned_images(p, theta));
}

bool is_admissible(const NecSignature& sig, const Epimorphism& theta) {
  auto p = presentation(sig);
  auto v = aligned_images(p, theta);
  if (theta.order < 2) return false;
  return relations_hold(sig, p, theta.order, v) && lemma_conditions(sig, p, theta.order, v);
}

std::vector<Epimorphism> enumerate_epimorphisms(const NecSignature& sig, int order,
                                                std::uint64_t budget) {
  std::vector<Epimorphism> out;
  if (order < 2) return out;
  const int n = order;
  auto p = presentation(sig);

  std::vector<std::vector<int>> domain(p.generators.size());
  double candidates = 1;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const auto& gen = p.generators[i];
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      if (gen.kind == GeneratorKind::elliptic) ok = element_order(v, n) == sig.periods[gen.index - 1];
      if (gen.kind == GeneratorKind::reflection) ok = element_order(v, n) == 2;
      if (ok) domain[i].push_back(v);
    }
    if (domain[i].empty()) return out;
    candidates *= static_cast<double>(domain[i].size());
  }
  if (candidates > static_cast<double>(budget))
    throw Error(Errc::search_space_too_large,
                to_string(sig) + " needs " + std::to_string(static_cast<long double>(candidates)) + " candidates");

  std::vector<std::size_t> pos(p.generators.size(), 0);
  std::vector<int> v(p.generators.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = domain[i][0];
  while (true) {
    if (relations_hold(sig, p, n, v) && lemma_conditions(sig, p, n, v)) out.push_back(from_aligned(p, n, v));
    std::size_t i = v.size();
    while (i > 0) {
      --i;
      if (++pos[i] < domain[i].size()) {
        v[i] = domain[i][pos[i]];
        break;
      }
      pos[i] = 0;
      v[i] = domain[i][0];
      if (i == 0) return out;
    }
    if (v.empty()) return out;
  }
}

std::vector<NecSignature> enumerate_signatures(int genus, int order) {
  std::vector<NecSignature> out;
  if (order < 1 || genus < 1) return out;
  std::vector<int> divisors;
  for (int d = 2; d <= order; ++d)
    if (order % d == 0) divisors.push_back(d);
  // sum over the structure is (g - 2) / n; every ingredient is at least 1/2
  const long long target_num = genus - 2;  // divided by order
  const int cap = static_cast<int>(2 * ((genus - 2) / order + 2) + 2);

  std::vector<int> periods;
  auto try_sig = [&](int h, Sign sign, int k) {
    long long eps = sign == Sign::minus ? 1 : 2;
    long long lhs = static_cast<long long>(order) * (eps * h + k - 2);
    for (int m : periods) lhs += order - order / m;
    if (lhs != target_num) return;
    if (sign == Sign::plus && h == 0 && periods.empty() && k == 0) return;
    if (sign == Sign::minus && h == 0) return;
    if (sign == Sign::plus && k == 0) return;
    out.push_back(NecSignature::make(h, sign, periods, k));
  };
  // periods as non-decreasing sequences over the divisors
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    for (Sign sign : {Sign::minus, Sign::plus}) {
      long long eps = sign == Sign::minus ? 1 : 2;
      for (int h = 0; eps * h <= cap; ++h)
        for (int k = 0; k <= cap; ++k) try_sig(h, sign, k);
    }
    if (static_cast<int>(periods.size()) >= cap) return;
    for (std::size_t i = from; i < divisors.size(); ++i) {
      periods.push_back(divisors[i]);
      self(self, i);
      periods.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConjugacyInvariants conjugacy_invariants(const NecSignature& sig, const Epimorphism& theta) {
  const int n = theta.order;
  const bool all_periods_n =
      std::all_of(sig.periods.begin(), sig.periods.end(), [n](int m) { return m == n; });
  auto p = presentation(sig);
  auto v = aligned_images(p, theta);

  if (n > 2 && is_prime(n) && sig.sign == Sign::minus && all_periods_n && sig.cycles == 0) {
    std::vector<int> xs;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (p.generators[i].kind == GeneratorKind::elliptic) xs.push_back(v[i]);
    std::vector<int> best;
    for (int a = 1; a < n; ++a) {
      std::vector<int> w;
      for (int x : xs) {
        int s = mod(static_cast<long long>(a) * x, n);
        w.push_back(std::min(s, n - s));
      }
      std::sort(w.begin(), w.end());
      if (best.empty() || w < best) best = std::move(w);
    }
    return OddPrimeInvariant{std::move(best)};
  }

  if (n == 2 && all_periods_n) {
    Order2Invariant inv;
    int glide_sum = 0;
    bool all_zero = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto kind = p.generators[i].kind;
      if (kind == GeneratorKind::connector && v[i] == 1) ++inv.one_sided_ovals;
      if (kind == GeneratorKind::glide) {
        glide_sum ^= v[i];
        all_zero = all_zero && v[i] == 0;
      }
    }
    if (sig.sign == Sign::minus && sig.period_count() == 0 && inv.one_sided_ovals == 0) {
      inv.glide_sum = glide_sum;
      inv.glides_all_zero = all_zero;
    }
    return inv;
  }

  throw Error(Errc::unsupported_family, to_string(sig) + " with n=" + std::to_string(n));
}

bool are_conjugate(const NecSignature& sig, const Epimorphism& first, const Epimorphism& second) {
  if (first.order != second.order) return false;
  return conjugacy_invariants(sig, first) == conjugacy_invariants(sig, second);
}

std::string to_string(const Automorphism& aut) {
  switch (aut.kind) {
    case AutomorphismKind::elliptic_into_handle: return "elliptic_into_handle";
    case AutomorphismKind::connector_into_handle: return "connector_into_handle";
    case AutomorphismKind::handle_shear: return "handle_shear";
    case AutomorphismKind::elliptic_into_glide: return "elliptic_into_glide";
    case AutomorphismKind::connector_into_glide: return "connector_into_glide";
    case AutomorphismKind::swap_elliptic: return "swap_elliptic" + std::to_string(aut.index);
    case AutomorphismKind::swap_connector: return "swap_connector" + std::to_string(aut.index);
  }
  return "?";
}

bool is_applicable(const NecSignature& sig, const Automorphism& aut) {
  const bool plus_handles = sig.sign == Sign::plus && sig.quotient_genus >= 1;
  const bool minus = sig.sign == Sign::minus;
  switch (aut.kind) {
    case AutomorphismKind::elliptic_into_handle: return plus_handles && sig.period_count() >= 1;
    case AutomorphismKind::connector_into_handle: return plus_handles && sig.cycles >= 1;
    case AutomorphismKind::handle_shear: return plus_handles;
    case AutomorphismKind::elliptic_into_glide: return minus && sig.period_count() >= 1;
    case AutomorphismKind::connector_into_glide: return minus && sig.cycles >= 1;
    case AutomorphismKind::swap_elliptic:
      // periods are stored sorted, so only equal neighbours can trade places
      return aut.index >= 1 && aut.index + 1 <= sig.period_count() &&
             sig.periods[aut.index - 1] == sig.periods[aut.index];
    case AutomorphismKind::swap_connector: return aut.index >= 1 && aut.index + 1 <= sig.cycles;
  }
  return false;
}

std::vector<Automorphism> applicable_automorphisms(const NecSignature& sig) {
  std::vector<Automorphism> out;
  for (auto kind : {AutomorphismKind::elliptic_into_handle, AutomorphismKind::connector_into_handle,
                    AutomorphismKind::handle_shear, AutomorphismKind::elliptic_into_glide,
                    AutomorphismKind::connector_into_glide}) {
    if (is_applicable(sig, {kind, 0})) out.push_back({kind, 0});
  }
  for (int i = 1; i < sig.period_count(); ++i)
    if (is_applicable(sig, {AutomorphismKind::swap_elliptic, i})) out.push_back({AutomorphismKind::swap_elliptic, i});
  for (int j = 1; j < sig.cycles; ++j) out.push_back({AutomorphismKind::swap_connector, j});
  return out;
}

Epimorphism apply_automorphism(const NecSignature& sig, const Epimorphism& theta,
                               const Automorphism& aut) {
  if (!is_applicable(sig, aut)) throw Error(Errc::automorphism_not_applicable, to_string(aut) + " on " + to_string(sig));
  const int n = theta.order;
  Epimorphism out = theta;
  auto get = [&](char prefix, int i) { return theta.image(name_of(prefix, i)); };
  auto set = [&](char prefix, int i, long long value) { out.images[name_of(prefix, i)] = mod(value, n); };
  const int r = sig.period_count();
  const int k = sig.cycles;
  switch (aut.kind) {
    case AutomorphismKind::elliptic_into_handle: set('b', 1, get('b', 1) + get('x', r)); break;
    case AutomorphismKind::connector_into_handle: set('b', 1, get('b', 1) + get('e', k)); break;
    case AutomorphismKind::handle_shear: set('b', 1, get('b', 1) + get('a', 1)); break;
    case AutomorphismKind::elliptic_into_glide:
      set('d', 1, get('d', 1) + get('x', r));
      set('x', r, -get('x', r));
      break;
    case AutomorphismKind::connector_into_glide:
      set('d', 1, get('d', 1) + get('e', k));
      set('e', k, -get('e', k));
      break;
    case AutomorphismKind::swap_elliptic:
      set('x', aut.index, get('x', aut.index + 1));
      set('x', aut.index + 1, get('x', aut.index));
      break;
    case AutomorphismKind::swap_connector:
      set('e', aut.index, get('e', aut.index + 1));
      set('e', aut.index + 1, get('e', aut.index));
      set('c', aut.index, get('c', aut.index + 1));
      set('c', aut.index + 1, get('c', aut.index));
      break;
  }
  return out;
}

}  // namespace mcg
