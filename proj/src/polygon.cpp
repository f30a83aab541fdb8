#include "mcg/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg {

namespace {

// Union-find over integers with a parity bit relative to the root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int size) : parent_(size), parity_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    int parity = 0;
    int root = x;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // path compression keeping parities consistent
    int p = parity;
    while (parent_[x] != root) {
      const int next = parent_[x], next_parity = p ^ parity_[x];
      parent_[x] = root;
      parity_[x] = p;
      x = next;
      p = next_parity;
    }
    return {root, parity};
  }

  /// Joins x and y with relative parity; returns false on a conflict.
  bool unite(int x, int y, int parity) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == parity;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ parity;
    return true;
  }

  int components() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i).first == i) ++count;
    return count;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

struct Rational {
  std::int64_t num, den;
  friend bool operator<(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  }
  friend bool operator==(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den == static_cast<__int128>(y.num) * x.den;
  }
};

Rational position(const EdgePosition& p) { return {p.num, p.den}; }

// Perimeter order of points on one polygon copy.
bool perimeter_less(const EdgePosition& x, const EdgePosition& y) {
  if (x.edge != y.edge) return x.edge < y.edge;
  return position(x) < position(y);
}

struct BoundaryPoint {
  BoundaryItem item;
  Rational t;
  friend bool operator<(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.item != y.item) return x.item < y.item;
    return x.t < y.t;
  }
};

BoundaryPoint identified(const GluedSurface& glued, const BoundaryPoint& p) {
  const bool flip = glued.flip(p.item);
  return {glued.partner(p.item), flip ? p.t : Rational{p.t.den - p.t.num, p.t.den}};
}

// Representative of a surface point lying on an identified edge.
BoundaryPoint canonical(const GluedSurface& glued, const BoundaryPoint& p) {
  const BoundaryPoint q = identified(glued, p);
  return q < p ? q : p;
}

BoundaryPoint point_of(int copy, const EdgePosition& e) { return {{copy, e.edge}, position(e)}; }

bool chords_cross(const Chord& x, const Chord& y) {
  if (x.copy != y.copy) return false;
  auto [a, b] = std::minmax(x.in, x.out, perimeter_less);
  auto inside = [&](const EdgePosition& p) { return perimeter_less(a, p) && perimeter_less(p, b); };
  return inside(y.in) != inside(y.out);
}

std::string token_text(const EdgeToken& t) {
  switch (t.kind) {
    case EdgeKind::primed: return t.label + "'";
    case EdgeKind::starred: return t.label + "*";
    default: return t.label;
  }
}

// For each token position, the position of its partner; -1 for boundary tokens.
std::vector<int> partner_positions(const SurfaceSymbol& sym) {
  std::map<std::string, std::vector<int>> where;
  for (int p = 0; p < static_cast<int>(sym.tokens.size()); ++p) where[sym.tokens[p].label].push_back(p);
  std::vector<int> partner(sym.tokens.size(), -1);
  for (const auto& [label, positions] : where) {
    if (positions.size() == 1) {
      if (sym.tokens[positions[0]].kind != EdgeKind::boundary)
        throw Error(Errc::malformed_symbol, "unpaired edge " + label);
      continue;
    }
    if (positions.size() != 2) throw Error(Errc::malformed_symbol, "edge " + label + " occurs more than twice");
    const auto& t0 = sym.tokens[positions[0]];
    const auto& t1 = sym.tokens[positions[1]];
    const int plain = (t0.kind == EdgeKind::plain) + (t1.kind == EdgeKind::plain);
    const bool partner_ok = t0.kind == EdgeKind::primed || t0.kind == EdgeKind::starred ||
                            t1.kind == EdgeKind::primed || t1.kind == EdgeKind::starred;
    if (plain != 1 || !partner_ok) throw Error(Errc::malformed_symbol, "edge " + label + " is not paired as a, a' or a, a*");
    partner[positions[0]] = positions[1];
    partner[positions[1]] = positions[0];
  }
  return partner;
}

int mod(long long x, int n) { return static_cast<int>(((x % n) + n) % n); }

int inverse_mod(int s, int n) {
  for (int x = 1; x < n; ++x)
    if (mod(static_cast<long long>(s) * x, n) == 1) return x;
  return n == 1 ? 0 : -1;
}

}  // namespace

std::string to_string(const SurfaceSymbol& sym) {
  std::string out;
  for (const auto& t : sym.tokens) out += (out.empty() ? "" : " ") + token_text(t);
  return out;
}

SurfaceSymbol parse_symbol(std::string_view text) {
  SurfaceSymbol sym;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    EdgeToken t;
    if (word.back() == '\'' || word.back() == '*') {
      t.kind = word.back() == '\'' ? EdgeKind::primed : EdgeKind::starred;
      word.pop_back();
    }
    if (word.empty() || word.find_first_of("'*") != std::string::npos)
      throw Error(Errc::malformed_symbol, "bad token in " + std::string(text));
    t.label = word;
    sym.tokens.push_back(t);
  }
  std::map<std::string, int> count;
  for (const auto& t : sym.tokens) ++count[t.label];
  for (auto& t : sym.tokens)
    if (count[t.label] == 1 && t.kind == EdgeKind::plain) t.kind = EdgeKind::boundary;
  partner_positions(sym);
  return sym;
}

SurfaceSymbol surface_symbol(const NecSignature& sig) {
  SurfaceSymbol sym;
  auto add = [&](std::string label, int index, EdgeKind kind) {
    sym.tokens.push_back({label + std::to_string(index), kind});
  };
  for (int i = 1; i <= sig.period_count(); ++i) {
    add("x", i, EdgeKind::plain);
    add("x", i, EdgeKind::primed);
  }
  for (int j = 1; j <= sig.cycles; ++j) {
    add("e", j, EdgeKind::plain);
    add("g", j, EdgeKind::boundary);
    add("e", j, EdgeKind::primed);
  }
  for (int l = 1; l <= sig.quotient_genus; ++l) {
    if (sig.sign == Sign::plus) {
      add("a", l, EdgeKind::plain);
      add("b", l, EdgeKind::primed);
      add("a", l, EdgeKind::primed);
      add("b", l, EdgeKind::plain);
    } else {
      add("a", l, EdgeKind::plain);
      add("a", l, EdgeKind::starred);
    }
  }
  return sym;
}

int GluedSurface::pairing_of(const BoundaryItem& item) const {
  for (int k = 0; k < static_cast<int>(pairings.size()); ++k)
    if (pairings[k].first == item || pairings[k].second == item) return k;
  throw Error(Errc::invalid_parameters, "edge " + std::to_string(item.edge) + " of copy " +
                                            std::to_string(item.copy) + " is not identified");
}

BoundaryItem GluedSurface::partner(const BoundaryItem& item) const {
  const auto& p = pairings[pairing_of(item)];
  return p.first == item ? p.second : p.first;
}

bool GluedSurface::flip(const BoundaryItem& item) const { return pairings[pairing_of(item)].flip; }

Classification classify(const GluedSurface& s) {
  const int e = s.edges_per_copy(), n = s.copies;
  // corner (copy, edge, end) with end 0 the start of the edge
  auto corner = [&](int copy, int edge, int end) { return (copy * e + edge) * 2 + end; };
  ParityUnionFind corners(2 * n * e), sheets(n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < e; ++p) corners.unite(corner(i, p, 1), corner(i, (p + 1) % e, 0), 0);
  bool orientable = true;
  for (const auto& pr : s.pairings) {
    const auto [a, b] = std::pair{pr.first, pr.second};
    corners.unite(corner(a.copy, a.edge, 0), corner(b.copy, b.edge, pr.flip ? 0 : 1), 0);
    corners.unite(corner(a.copy, a.edge, 1), corner(b.copy, b.edge, pr.flip ? 1 : 0), 0);
    orientable = sheets.unite(a.copy, b.copy, pr.flip ? 1 : 0) && orientable;
  }
  if (static_cast<int>(s.pairings.size()) * 2 != n * e) throw Error(Errc::malformed_symbol, "unidentified edges remain");
  Classification c;
  c.orientable = orientable;
  c.euler_characteristic = corners.components() - static_cast<int>(s.pairings.size()) + n;
  c.genus = orientable ? (2 - c.euler_characteristic) / 2 : 2 - c.euler_characteristic;
  return c;
}

Classification classify_symbol(const SurfaceSymbol& sym) {
  const auto partner = partner_positions(sym);
  GluedSurface s;
  s.symbol = sym;
  for (int p = 0; p < static_cast<int>(sym.tokens.size()); ++p) {
    if (partner[p] < 0) throw Error(Errc::malformed_symbol, "symbol has a boundary edge");
    if (p < partner[p]) {
      const bool flip = sym.tokens[p].kind == EdgeKind::starred || sym.tokens[partner[p]].kind == EdgeKind::starred;
      s.pairings.push_back({{0, p}, {0, partner[p]}, flip});
    }
  }
  return classify(s);
}

GluedSurface assemble_fundamental_domain(const NecSignature& sig, const Epimorphism& theta, int y_image) {
  const int n = theta.order;
  GluedSurface s;
  s.copies = n;
  s.symbol = surface_symbol(sig);
  if (n == 1) {
    if (sig.period_count() > 0 || sig.cycles > 0)
      throw Error(Errc::not_admissible, "the trivial cover of an orbifold is not a surface");
  } else if (!is_admissible(sig, theta)) {
    throw Error(Errc::not_admissible, to_string(sig));
  }
  const int s_inv = inverse_mod(mod(y_image, n), n);
  if (s_inv < 0) throw Error(Errc::generator_not_primitive, std::to_string(y_image) + " in Z_" + std::to_string(n));

  const auto partner = partner_positions(s.symbol);
  auto generator_of = [&](const EdgeToken& t) {
    std::string name = t.label;
    if (name[0] == 'g') name[0] = 'c';
    if (name[0] == 'a' && sig.sign == Sign::minus) name[0] = 'd';
    return name;
  };
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < s.edges_per_copy(); ++p) {
      const auto& t = s.symbol.tokens[p];
      const int shift = n == 1 ? 0 : mod(static_cast<long long>(theta.image(generator_of(t))) * s_inv, n);
      const int j = (i + shift) % n;
      if (t.kind == EdgeKind::boundary) {
        if (j == i) throw Error(Errc::not_admissible, "reflection axis " + t.label + " stays on the boundary");
        if (i < j) s.pairings.push_back({{i, p}, {j, p}, true});
      } else if (t.kind == EdgeKind::plain) {
        const bool flip = s.symbol.tokens[partner[p]].kind == EdgeKind::starred;
        s.pairings.push_back({{i, p}, {j, partner[p]}, flip});
      }
    }
  return s;
}

GluedSurface assemble_fundamental_domain(const NecSignature& sig, const Epimorphism& theta,
                                         const std::string& y_generator) {
  if (theta.images.count(y_generator) == 0) throw Error(Errc::invalid_parameters, "no generator " + y_generator);
  return assemble_fundamental_domain(sig, theta, theta.image(y_generator));
}

void validate_curve(const CurveDiagram& curve, const GluedSurface& glued) {
  if (curve.chords.empty()) throw Error(Errc::invalid_parameters, "empty curve");
  auto check = [&](int copy, const EdgePosition& e) {
    if (copy < 0 || copy >= glued.copies || e.edge < 0 || e.edge >= glued.edges_per_copy() || e.den <= 0 ||
        e.num <= 0 || e.num >= e.den)
      throw Error(Errc::invalid_parameters, "chord endpoint outside the domain");
  };
  const std::size_t m = curve.chords.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto& ch = curve.chords[k];
    check(ch.copy, ch.in);
    check(ch.copy, ch.out);
    if (ch.in == ch.out) throw Error(Errc::degenerate_curve, "chord with coincident endpoints");
    const auto& next = curve.chords[(k + 1) % m];
    const BoundaryPoint exit = identified(glued, point_of(ch.copy, ch.out));
    const BoundaryPoint entry = point_of(next.copy, next.in);
    if (exit.item != entry.item || !(exit.t == entry.t))
      throw Error(Errc::invalid_parameters, "chord " + std::to_string(k) + " does not lead into the next one");
  }
}

CurveDiagram deck_image(const CurveDiagram& curve, const GluedSurface& glued) {
  CurveDiagram out = curve;
  for (auto& ch : out.chords) ch.copy = (ch.copy + 1) % glued.copies;
  return out;
}

namespace {

std::vector<BoundaryPoint> surface_points(const CurveDiagram& curve, const GluedSurface& glued) {
  std::vector<BoundaryPoint> points;
  for (const auto& ch : curve.chords) points.push_back(canonical(glued, point_of(ch.copy, ch.out)));
  return points;
}

bool is_simple(const CurveDiagram& curve, const GluedSurface& glued) {
  auto points = surface_points(curve, glued);
  std::sort(points.begin(), points.end());
  for (std::size_t k = 1; k < points.size(); ++k)
    if (!(points[k - 1] < points[k])) return false;
  for (std::size_t x = 0; x < curve.chords.size(); ++x)
    for (std::size_t y = x + 1; y < curve.chords.size(); ++y)
      if (chords_cross(curve.chords[x], curve.chords[y])) return false;
  return true;
}

}  // namespace

CurveProperties curve_properties(const CurveDiagram& curve, const GluedSurface& glued) {
  validate_curve(curve, glued);
  CurveProperties props;
  props.simple = is_simple(curve, glued);
  int parity = 0;
  for (const auto& ch : curve.chords) parity ^= glued.flip({ch.copy, ch.out.edge}) ? 1 : 0;
  props.two_sided = parity == 0;
  return props;
}

int intersection_count(const CurveDiagram& first, const CurveDiagram& second, const GluedSurface& glued) {
  validate_curve(first, glued);
  validate_curve(second, glued);
  if (!is_simple(first, glued) || !is_simple(second, glued))
    throw Error(Errc::invalid_parameters, "intersection counts need simple curves");
  auto p1 = surface_points(first, glued), p2 = surface_points(second, glued);
  std::sort(p1.begin(), p1.end());
  for (const auto& p : p2)
    if (std::binary_search(p1.begin(), p1.end(), p))
      throw Error(Errc::not_in_general_position, "the curves share a point on an edge");
  int count = 0;
  for (const auto& x : first.chords)
    for (const auto& y : second.chords)
      if (chords_cross(x, y)) ++count;
  return count;
}

ComplementProfile complement_profile(const std::vector<CurveDiagram>& curves, const GluedSurface& glued) {
  const int n = glued.copies, e = glued.edges_per_copy();
  std::vector<std::vector<Chord>> by_copy(n);
  for (const auto& c : curves) {
    validate_curve(c, glued);
    for (const auto& ch : c.chords) by_copy[ch.copy].push_back(ch);
  }

  // cut points on every boundary item, sorted
  std::map<BoundaryItem, std::vector<Rational>> cuts;
  for (int i = 0; i < n; ++i)
    for (const auto& ch : by_copy[i])
      for (const auto& end : {ch.in, ch.out}) cuts[{i, end.edge}].push_back(position(end));
  for (auto& [item, ts] : cuts) std::sort(ts.begin(), ts.end());

  // Regions meeting the boundary of a copy are told apart by the side of each chord they lie on.
  std::vector<std::map<std::vector<bool>, int>> regions(n);
  int region_count = 0;
  auto region_of = [&](int copy, int edge, Rational t) {
    std::vector<bool> sides;
    for (const auto& ch : by_copy[copy]) {
      auto [a, b] = std::minmax(ch.in, ch.out, perimeter_less);
      auto after = [&](const EdgePosition& p) { return p.edge < edge || (p.edge == edge && position(p) < t); };
      sides.push_back(after(a) && !after(b));
    }
    auto [it, inserted] = regions[copy].try_emplace(sides, region_count);
    if (inserted) ++region_count;
    return it->second;
  };
  // Sub-interval k of an item lies between cut k-1 and cut k; returns its midpoint.
  auto midpoint = [&](const BoundaryItem& item, std::size_t k) {
    const auto& ts = cuts[item];
    const Rational lo = k == 0 ? Rational{0, 1} : ts[k - 1];
    const Rational hi = k == ts.size() ? Rational{1, 1} : ts[k];
    return Rational{lo.num * hi.den + hi.num * lo.den, 2 * lo.den * hi.den};
  };

  struct Glue {
    int x, y, parity;
  };
  std::vector<Glue> glues;
  for (const auto& pr : glued.pairings) {
    const std::size_t pieces = cuts[pr.first].size() + 1;
    for (std::size_t k = 0; k < pieces; ++k) {
      const Rational t = midpoint(pr.first, k);
      const Rational u = pr.flip ? t : Rational{t.den - t.num, t.den};
      glues.push_back({region_of(pr.first.copy, pr.first.edge, t), region_of(pr.second.copy, pr.second.edge, u),
                       pr.flip ? 1 : 0});
    }
  }
  // copies with no identified edges still have their own regions
  for (int i = 0; i < n; ++i)
    if (e > 0) region_of(i, 0, midpoint({i, 0}, 0));

  ParityUnionFind uf(region_count);
  bool conflict = false;
  for (const auto& gl : glues) conflict = !uf.unite(gl.x, gl.y, gl.parity) || conflict;

  int interior = 0;
  for (int i = 0; i < n; ++i) {
    int crossings = 0;
    for (std::size_t x = 0; x < by_copy[i].size(); ++x)
      for (std::size_t y = x + 1; y < by_copy[i].size(); ++y)
        if (chords_cross(by_copy[i][x], by_copy[i][y])) ++crossings;
    const int faces = 1 + static_cast<int>(by_copy[i].size()) + crossings;
    interior += faces - static_cast<int>(regions[i].size());
  }
  return {uf.components() + interior == 1, conflict};
}

std::string_view to_string(PairType type) {
  switch (type) {
    case PairType::type1: return "Type1";
    case PairType::type2: return "Type2";
    default: return "None";
  }
}

PairType parse_pair_type(std::string_view text) {
  for (auto t : {PairType::type1, PairType::type2, PairType::none})
    if (to_string(t) == text) return t;
  throw Error(Errc::parse_error, "unknown pair type " + std::string(text));
}

PairType is_standard_pair(const CurveDiagram& c, const CurveDiagram& d, const GluedSurface& glued) {
  const auto pc = curve_properties(c, glued), pd = curve_properties(d, glued);
  if (!pc.simple || !pd.simple || !pc.two_sided || !pd.two_sided) return PairType::none;
  const int crossings = intersection_count(c, d, glued);
  const bool c_nonsep = complement_profile({c}, glued).connected;
  const bool d_nonsep = complement_profile({d}, glued).connected;
  if (!c_nonsep || !d_nonsep) return PairType::none;
  if (crossings == 1) return PairType::type1;
  if (crossings == 0 && complement_profile({c, d}, glued) == ComplementProfile{true, true}) return PairType::type2;
  return PairType::none;
}

}  // namespace mcg
