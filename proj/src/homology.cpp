#include "mcg/homology.hpp"

#include <algorithm>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg {

Z2Matrix intersection_form(const Layout& layout) {
  Z2Matrix form = Z2Matrix::Zero(layout.genus(), layout.genus());
  for (int i = 1; i <= layout.handles; ++i) form(layout.a(i), layout.b(i)) = form(layout.b(i), layout.a(i)) = 1;
  for (int j = 1; j <= layout.crosscaps; ++j) form(layout.c(j), layout.c(j)) = 1;
  return form;
}

Z2Vector characteristic_class(const Layout& layout) {
  Z2Vector c = Z2Vector::Zero(layout.genus());
  for (int j = 1; j <= layout.crosscaps; ++j) c(layout.c(j)) = 1;
  return c;
}

VgPlusBasis vg_plus_basis(int genus, const Layout& layout) {
  if (layout.handles < 0 || layout.crosscaps < 1 || genus != layout.genus())
    throw Error(Errc::invalid_parameters, "layout does not describe N_" + std::to_string(genus));
  VgPlusBasis out;
  auto unit = [&](Eigen::Index i) {
    Z2Vector v = Z2Vector::Zero(genus);
    v(i) = 1;
    return v;
  };
  for (int i = 1; i <= layout.handles; ++i) {
    out.basis.push_back(unit(layout.a(i)));
    out.basis.push_back(unit(layout.b(i)));
  }
  for (int j = 1; j < layout.crosscaps; ++j) {
    Z2Vector v = unit(layout.c(j));
    v(layout.c(j + 1)) = 1;
    out.basis.push_back(v);
  }
  if (layout.crosscaps % 2 == 0) out.c = characteristic_class(layout);
  return out;
}

namespace {

// Z2 model of an involution, built class by class while folding over a recipe.
class ModelBuilder {
 public:
  enum class Group { handle, orbit_first, orbit_second, crosscap };

  int add(Group group) {
    groups_.push_back(group);
    images_.push_back({static_cast<int>(groups_.size()) - 1});
    return static_cast<int>(groups_.size()) - 1;
  }
  void pair(int x, int y) { pairings_.emplace_back(x, y); }
  void add_to_image(int of, int term) { images_[of].push_back(term); }
  void set_image(int of, std::vector<int> image) { images_[of] = std::move(image); }

  void fixed_handles(int count) {
    for (int i = 0; i < count; ++i) {
      const int a = add(Group::handle), b = add(Group::handle);
      pair(a, b);
    }
  }
  void swapped_handles(int count) {
    for (int i = 0; i < count; ++i) {
      const int a = add(Group::handle), b = add(Group::handle);
      const int a2 = add(Group::handle), b2 = add(Group::handle);
      pair(a, b);
      pair(a2, b2);
      set_image(a, {a2});
      set_image(a2, {a});
      set_image(b, {b2});
      set_image(b2, {b});
    }
  }
  void fixed_crosscap() { pair_self(add(Group::crosscap)); }
  void swapped_crosscaps() {
    const int x = add(Group::orbit_first), y = add(Group::orbit_second);
    pair_self(x);
    pair_self(y);
    set_image(x, {y});
    set_image(y, {x});
  }
  void pair_self(int x) { pair(x, x); }

  int size() const { return static_cast<int>(groups_.size()); }

  Z2Matrix gram() const {
    Z2Matrix form = Z2Matrix::Zero(size(), size());
    for (auto [x, y] : pairings_) form(x, y) = form(y, x) = 1;
    return form;
  }
  Z2Matrix action() const {
    Z2Matrix m = Z2Matrix::Zero(size(), size());
    for (int j = 0; j < size(); ++j)
      for (int i : images_[j]) m(i, j) ^= 1;
    return m;
  }
  const std::vector<Group>& groups() const { return groups_; }
  const std::vector<std::pair<int, int>>& pairings() const { return pairings_; }

 private:
  std::vector<Group> groups_;
  std::vector<std::vector<int>> images_;
  std::vector<std::pair<int, int>> pairings_;
};

void add_base(ModelBuilder& model, const BaseAction& base, int& torus_a, int& torus_b) {
  switch (base.kind) {
    case BaseKind::reflection:
    case BaseKind::rotation:
      model.fixed_handles(base.genus);
      break;
    case BaseKind::free_rotation:
    case BaseKind::torus_antipodism:
      torus_a = model.add(ModelBuilder::Group::handle);
      torus_b = model.add(ModelBuilder::Group::handle);
      model.pair(torus_a, torus_b);
      break;
    case BaseKind::sphere_antipodism:
      break;
  }
  model.swapped_handles(base.conjugate_pairs);
}

// Change of basis from the model classes to the standard layout: handles first,
// crosscaps ordered 2-orbit first halves, 2-orbit second halves, then the rest.
// Handle pairs whose form is not hyperbolic, (u, w) with <w, w> = 1, become the
// crosscaps w and w + u.
std::pair<Layout, Z2Matrix> standard_basis(const ModelBuilder& model) {
  const Z2Matrix gram = model.gram();
  const int n = model.size();
  std::vector<Z2Vector> handles, crosscaps[3];
  auto unit = [&](int i) {
    Z2Vector v = Z2Vector::Zero(n);
    v(i) = 1;
    return v;
  };
  for (auto [x, y] : model.pairings()) {
    if (x == y) {
      if (model.groups()[x] == ModelBuilder::Group::handle) continue;  // one-sided handle class
      const auto g = model.groups()[x];
      const int slot = g == ModelBuilder::Group::orbit_first ? 0 : g == ModelBuilder::Group::orbit_second ? 1 : 2;
      crosscaps[slot].push_back(unit(x));
    } else if (gram(x, x) == 0 && gram(y, y) == 0) {
      handles.push_back(unit(x));
      handles.push_back(unit(y));
    } else {
      const int one_sided = gram(y, y) ? y : x, other = one_sided == y ? x : y;
      crosscaps[2].push_back(unit(one_sided));
      Z2Vector v = unit(one_sided);
      v(other) = 1;
      crosscaps[2].push_back(v);
    }
  }
  Layout layout{static_cast<int>(handles.size()) / 2, 0};
  Z2Matrix p(n, n);
  int col = 0;
  for (const auto& v : handles) p.col(col++) = v;
  for (const auto& group : crosscaps)
    for (const auto& v : group) {
      p.col(col++) = v;
      ++layout.crosscaps;
    }
  return {layout, p};
}

}  // namespace

void check_structure(const Z2Matrix& m, const Layout& layout) {
  const Eigen::Index g = layout.genus();
  if (m.rows() != g || m.cols() != g) throw Error(Errc::unsupported_model, "matrix size does not match layout");
  const Z2Matrix form = intersection_form(layout);
  if (z2::mul(m, m) != Z2Matrix::Identity(g, g)) throw Error(Errc::unsupported_model, "M^2 != I");
  const Z2Matrix mt = m.transpose();
  if (z2::mul(z2::mul(mt, form), m) != form) throw Error(Errc::unsupported_model, "intersection form not preserved");
  const Z2Vector c = characteristic_class(layout);
  if (Z2Vector(z2::mul(m, c)) != c) throw Error(Errc::unsupported_model, "[c] not fixed");
}

InducedAction induced_z2_action(const InvolutionClass& c) {
  const ModelRecipe recipe = model_recipe(c);
  ModelBuilder model;
  int torus_a = -1, torus_b = -1;
  add_base(model, recipe.base, torus_a, torus_b);

  std::vector<int> handle_u, handle_w;
  for (const auto& step : recipe.steps) {
    switch (step.kind) {
      case SurgeryKind::blow_up_isolated:
      case SurgeryKind::blow_up_non_isolated:
        model.fixed_crosscap();
        break;
      case SurgeryKind::blow_up_two_orbit:
        model.swapped_crosscaps();
        break;
      case SurgeryKind::glue_surfaces:
        model.fixed_handles(step.factor.genus);
        model.swapped_handles(step.factor.conjugate_pairs);
        model.fixed_crosscap();
        model.fixed_crosscap();
        break;
      case SurgeryKind::add_handle: {
        const int u = model.add(ModelBuilder::Group::handle), w = model.add(ModelBuilder::Group::handle);
        model.pair(u, w);
        // w crosses the fixed oval u once; it is one-sided when the base rotation preserves orientation
        if (recipe.base.kind == BaseKind::free_rotation) model.pair_self(w);
        if (torus_a >= 0) model.add_to_image(w, torus_a);
        handle_u.push_back(u);
        handle_w.push_back(w);
        break;
      }
    }
  }
  for (int u : handle_u) {
    if (torus_b >= 0) model.add_to_image(torus_b, u);
    if (recipe.base.kind == BaseKind::sphere_antipodism)
      for (int w : handle_w) model.add_to_image(w, u);
  }

  auto [layout, p] = standard_basis(model);
  if (layout.genus() != c.genus) throw Error(Errc::unsupported_model, "model genus mismatch for " + to_string(c));
  const auto p_inv = z2::inverse(p);
  if (!p_inv) throw Error(Errc::unsupported_model, "degenerate model basis for " + to_string(c));
  const Z2Matrix pt = p.transpose();
  if (z2::mul(z2::mul(pt, model.gram()), p) != intersection_form(layout))
    throw Error(Errc::unsupported_model, "model form is not standard for " + to_string(c));
  Z2Matrix m = z2::mul(z2::mul(*p_inv, model.action()), p);
  check_structure(m, layout);
  return {layout, m};
}

bool TrivialityProfile::on_quotient() const {
  if (!on_quotient_opt) throw Error(Errc::quotient_undefined, "[c] is not in V_g^+ for odd k'");
  return *on_quotient_opt;
}

TrivialityProfile triviality_profile(const Z2Matrix& m, const Layout& layout) {
  const Eigen::Index g = layout.genus();
  const auto plus = vg_plus_basis(layout.genus(), layout);
  TrivialityProfile profile;
  profile.on_vg = m == Z2Matrix::Identity(g, g);
  auto moved = [&](const Z2Vector& v) { return Z2Vector(z2::add(z2::mul(m, v), v)); };
  profile.on_vg_plus = std::all_of(plus.basis.begin(), plus.basis.end(),
                                   [&](const Z2Vector& v) { return moved(v).isZero(); });
  if (plus.c) {
    profile.on_quotient_opt = std::all_of(plus.basis.begin(), plus.basis.end(), [&](const Z2Vector& v) {
      const Z2Vector d = moved(v);
      return d.isZero() || d == *plus.c;
    });
  }
  return profile;
}

DeterminantVerdict determinant_hom(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::not_unimodular, "matrix is not square");
  const std::int64_t det = bareiss_determinant(m);
  if (det != 1 && det != -1) throw Error(Errc::not_unimodular, "det = " + std::to_string(det));
  return {static_cast<int>(det), det == 1};
}

IntegerMatrix f4_variant_real_action(int genus, int quotient_genus, int isolated_points, int one_sided_ovals) {
  const int h = quotient_genus, km = one_sided_ovals;
  make_class(Family::F4, genus, h, isolated_points, 0, km);
  const int l = (km + isolated_points - 2) / 2;
  const int n = genus - 1;
  auto a = [&](int i) { return i - 1; };
  auto b = [&](int i) { return l + i - 1; };
  auto c = [&](int i) { return 2 * l + i - 1; };
  auto d = [&](int j) { return 2 * l + 2 * h - 1 + j - 1; };
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  const int half = (km + 1) / 2;

  for (int i = 1; i <= l; ++i) {
    m(a(i), a(i)) = -1;
    if (i <= half - 1)
      for (int j = 2 * i; j <= km; ++j) m(d(j), a(i)) -= 2;
    m(b(i), b(i)) = -1;
    if (i <= half)
      for (int j : {2 * i - 1, 2 * i})
        if (j <= km) m(d(j), b(i)) -= 2;
  }
  for (int i = 1; i < h; ++i) {
    m(c(i + h), c(i)) = 1;
    m(c(i), c(i + h)) = 1;
  }
  for (int i = 1; i <= 2 * h - 1; ++i) m(c(i), c(h)) = -1;
  for (int j = 1; j <= km; ++j) {
    m(d(j), c(h)) = -1;
    m(d(j), d(j)) = 1;
  }
  return m;
}

IntegerMatrix rotation_generator_action(int genus) {
  if (genus < 7) throw Error(Errc::genus_too_small, "rotation generators need g >= 7");
  const int n = genus - 1;
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  if (genus % 2 == 0) {
    // mu_i -> mu_{i+1} cyclically on all g crosscaps; v_i = mu_i - mu_g maps to v_{i+1} - v_1
    for (int i = 0; i < n; ++i) {
      if (i + 1 < n) m(i + 1, i) += 1;
      m(0, i) -= 1;
    }
  } else {
    // mu_g stays put, the other g - 1 crosscaps rotate
    for (int i = 0; i < n; ++i) m((i + 1) % n, i) = 1;
  }
  return m;
}

int matrix_order(const IntegerMatrix& m, int bound) {
  const IntegerMatrix id = IntegerMatrix::Identity(m.rows(), m.cols());
  IntegerMatrix p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

std::string export_bits(const Z2Matrix& m, const Layout& layout) {
  std::ostringstream out;
  out << "layout h'=" << layout.handles << ",k'=" << layout.crosscaps << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << static_cast<int>(m(i, j));
    out << '\n';
  }
  return out.str();
}

std::string export_csv(const IntegerMatrix& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace mcg
