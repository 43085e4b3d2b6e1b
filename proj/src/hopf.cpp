#include "spanv/hopf.hpp"

#include <stdexcept>

namespace spanv {

namespace {

template <class F>
void guarded(Report& r, const std::string& where, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.fail(where, e.what());
  }
}

void compare(const VectBackend& bk, Report& r, const std::string& where, const VCell2& u, const VCell2& v) {
  r.count();
  for (const auto& d : differences2(bk, u, v)) r.fail(where, d);
}

std::vector<VMorphism> identities(const VCell1& a) {
  std::vector<VMorphism> out;
  for (const auto& l : a.labels()) out.push_back(VMorphism::identity(l));
  return out;
}

void require_comonoid_size(const VMonad& p, const ComonoidStructure& c) {
  const std::size_t n = p.shape->num_morphisms();
  if (c.delta.size() != n || c.epsilon.size() != n)
    throw BoundaryError("need one comultiplication and one counit per morphism of the shape");
}

std::string at(const VMonad& p, std::size_t h) { return p.shape->morphism_set()[h].str(); }

// μ_{h,k} as stored, with a located error when missing.
const VMorphism& mu(const VMonad& p, std::size_t h, std::size_t k) { return detail::mu_at(p, h, k); }

struct AntipodeSides {
  VMorphism first_lhs, first_rhs, second_lhs, second_rhs;
};

// Both sides of both antipode equations at h for a candidate σ_h.
AntipodeSides antipode_sides(const VMonad& p, const ComonoidStructure& c, std::size_t h, std::size_t hi,
                             const VMorphism& s) {
  const FinCategory& d = *p.shape;
  const VMorphism& delta = c.delta[h];
  const VMorphism& eps = c.epsilon[h];
  VMorphism one = VMorphism::identity(p.F[h]);
  return {mu(p, h, hi) * tensor_mor(one, s) * delta, p.eta[d.tgt(h)] * eps,
          mu(p, hi, h) * tensor_mor(s, one) * delta, p.eta[d.src(h)] * eps};
}

}  // namespace

ComonoidLabeledCell comonoid_cell(const VMonadCells& t, const ComonoidStructure& c) {
  if (c.delta.size() != t.F.apex().size() || c.epsilon.size() != t.F.apex().size())
    throw BoundaryError("need one comultiplication and one counit per morphism of the shape");
  return {t.F, c.delta, c.epsilon};
}

OpmonoidalCells<VectBackend> opmonoidal_cells(const VectBackend& bk, const VMonadCells& t, const ComonoidStructure& c) {
  if (c.delta.size() != t.F.apex().size() || c.epsilon.size() != t.F.apex().size())
    throw BoundaryError("need one comultiplication and one counit per morphism of the shape");
  MonoidaleData mon = induced_monoidale(bk, t.base.carrier);
  const FinSet& D1 = t.F.apex();
  const FinSet& D0 = t.base.carrier;
  auto target = [&](Atom h) { return D0[t.F.span().left()(D1.index_of(h))]; };

  VCell1 Fm = hcomp1(bk, t.F, mon.m);
  VCell1 mFF = hcomp1(bk, mon.m, tensor1(bk, t.F, t.F));
  std::vector<VMorphism> d2;
  for (Atom e : Fm.apex().elements()) d2.push_back(c.delta[D1.index_of(e.first())]);
  VCell2 f2(bk, Fm, mFF,
            FinFn::from_atoms(Fm.apex(), mFF.apex(),
                              [&](Atom e) { return Atom::pair(target(e.first()), Atom::pair(e.first(), e.first())); }),
            std::move(d2));

  VCell1 Fu = hcomp1(bk, t.F, mon.u);
  std::vector<VMorphism> d0;
  for (Atom e : Fu.apex().elements()) d0.push_back(c.epsilon[D1.index_of(e.first())]);
  VCell2 f0(bk, Fu, mon.u, FinFn::from_atoms(Fu.apex(), mon.u.apex(), [&](Atom e) { return target(e.first()); }),
            std::move(d0));
  return {mon.m, mon.u, std::move(f2), std::move(f0)};
}

Report check_opmonoidal(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c) {
  Report r("opmonoidal");
  guarded(r, "boundary", [&] {
    VMonadCells t = monad_cells(bk, p);
    ComonoidLabeledCell cc = comonoid_cell(t, c);
    r.absorb(check_comonoid_cell(cc));
    if (!r.passed()) return;
    DuoidalUnits un = duoidal_units(bk, t.base);
    VCell2 delta = comultiplication2(bk, cc), eps = counit2(bk, cc);
    auto ch = [&](std::vector<VCell2> steps) { return chain(bk, steps); };
    compare(bk, r, "multiplication preserves comultiplication", ch({t.mu, delta}),
            ch({hcomp2(bk, delta, delta), duoidal_interchange(bk, t.F, t.F, t.F, t.F), star2(bk, t.mu, t.mu)}));
    compare(bk, r, "multiplication preserves counit", ch({t.mu, eps}), ch({hcomp2(bk, eps, eps), un.mu_J}));
    compare(bk, r, "unit preserves comultiplication", ch({t.eta, delta}),
            ch({un.delta_I, star2(bk, t.eta, t.eta)}));
    compare(bk, r, "unit preserves counit", ch({t.eta, eps}), un.iota);
  });
  return r;
}

VCell2 left_fusion(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c) {
  VMonadCells t = monad_cells(bk, p);
  return left_fusion(bk, t, opmonoidal_cells(bk, t, c));
}

VCell2 right_fusion(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c) {
  VMonadCells t = monad_cells(bk, p);
  return right_fusion(bk, t, opmonoidal_cells(bk, t, c));
}

HopfResult is_hopf(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c) {
  VMonadCells t = monad_cells(bk, p);
  OpmonoidalCells<VectBackend> op = opmonoidal_cells(bk, t, c);
  VCell2 left = left_fusion(bk, t, op), right = right_fusion(bk, t, op);
  HopfResult out;
  out.verdict = fusion_verdict(bk, left, right);
  if (auto g = is_groupoid(*p.shape); !g) out.groupoid_witness = g.witness;
  auto dets = [](const VCell2& f) {
    std::vector<FusionDeterminant> v;
    for (std::size_t i = 0; i < f.components().size(); ++i) v.push_back({f.from().apex()[i], determinant(f.component(i))});
    return v;
  };
  out.left = dets(left);
  out.right = dets(right);
  return out;
}

// ---- antipodes ----

Report check_antipode(const VMonad& p, const ComonoidStructure& c, const std::vector<VMorphism>& sigma) {
  Report r("antipode");
  const FinCategory& d = *p.shape;
  try {
    require_comonoid_size(p, c);
    if (sigma.size() != d.num_morphisms()) throw BoundaryError("need one antipode component per morphism");
  } catch (const std::exception& e) {
    r.fail("boundary", e.what());
    return r;
  }
  auto found = parallel_map(d.num_morphisms(), [&](std::size_t h) -> std::vector<Witness> {
    const std::string where = at(p, h);
    auto hi = d.inverse_of(h);
    if (!hi) return {{where, "has no inverse"}};
    const VMorphism& s = sigma[h];
    if (!(s.dom() == p.F[h]) || !(s.cod() == p.F[*hi]))
      return {{where, "antipode has type " + s.dom().str() + " -> " + s.cod().str() + ", expected " + p.F[h].str() +
                          " -> " + p.F[*hi].str()}};
    std::vector<Witness> out;
    try {
      AntipodeSides sides = antipode_sides(p, c, h, *hi, s);
      if (auto diff = first_difference(sides.first_lhs, sides.first_rhs))
        out.push_back({where, "first antipode axiom: " + *diff});
      if (auto diff = first_difference(sides.second_lhs, sides.second_rhs))
        out.push_back({where, "second antipode axiom: " + *diff});
    } catch (const std::exception& e) {
      out.push_back({where, e.what()});
    }
    return out;
  });
  r.count(2 * d.num_morphisms());
  for (const auto& ws : found)
    for (const auto& w : ws) r.fail(w.where, w.what);
  return r;
}

Report check_antipode_duoidal(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c,
                              const std::vector<VMorphism>& sigma) {
  Report r("antipode (2-cells)");
  const FinCategory& d = *p.shape;
  guarded(r, "boundary", [&] {
    require_comonoid_size(p, c);
    if (auto g = is_groupoid(d); !g) {
      r.fail("shape", g.witness);
      return;
    }
    if (sigma.size() != d.num_morphisms()) throw BoundaryError("need one antipode component per morphism");
    VMonadCells t = monad_cells(bk, p);
    const VCell1& F = t.F;
    const VCell0& X = t.base;
    const FinSet& D1 = F.apex();
    VCell1 Fdag(bk, X, X, Span(F.span().right(), F.span().left()), F.labels());
    std::vector<std::size_t> inv;
    for (std::size_t h = 0; h < D1.size(); ++h) inv.push_back(*d.inverse_of(h));
    VCell2 s(bk, Fdag, F, FinFn(D1, D1, inv), sigma);
    VCell1 I = identity1(bk, X);
    std::vector<VObject> ks(D1.size(), VObject::unit());

    // leg selects t (first axiom) or s (second); around is F∘F† or F†∘F.
    auto axiom = [&](const std::string& name, const FinFn& leg, const VCell1& around, const VCell2& flip) {
      VCell1 S(bk, X, X, Span(leg, leg), F.labels());
      VCell1 SK(bk, X, X, Span(leg, leg), ks);
      VCell2 delta(bk, S, around,
                   FinFn::from_atoms(S.apex(), around.apex(), [](Atom h) { return Atom::pair(h, h); }), c.delta);
      VCell2 bottom = chain(bk, std::vector<VCell2>{delta, flip, t.mu});
      VCell2 eps(bk, S, SK, FinFn::identity(D1), c.epsilon);
      VCell2 drop(bk, SK, I, leg, identities(SK));
      VCell2 top = chain(bk, std::vector<VCell2>{eps, drop, t.eta});
      compare(bk, r, name, bottom, top);
    };
    axiom("first antipode axiom", F.span().left(), hcomp1(bk, F, Fdag), hcomp2(bk, identity2(bk, F), s));
    axiom("second antipode axiom", F.span().right(), hcomp1(bk, Fdag, F), hcomp2(bk, s, identity2(bk, F)));
  });
  Report pointwise = check_antipode(p, c, sigma);
  r.note("componentwise", to_string(pointwise.status()));
  if (pointwise.passed() != r.passed())
    r.fail("agreement", std::string("2-cell verdict ") + (r.passed() ? "pass" : "fail") + " but componentwise " +
                            to_string(pointwise.status()));
  return r;
}

AntipodeResult compute_antipode(const VMonad& p, const ComonoidStructure& c) {
  const FinCategory& d = *p.shape;
  require_comonoid_size(p, c);
  if (auto g = is_groupoid(d); !g) return {std::nullopt, g.witness};
  using Matrix = VMorphism::Matrix;
  auto solved = parallel_map(d.num_morphisms(), [&](std::size_t h) -> AntipodeResult {
    const std::size_t hi = *d.inverse_of(h);
    const VObject &dom = p.F[h], &cod = p.F[hi];
    const auto rows = static_cast<Eigen::Index>(cod.dim()), cols = static_cast<Eigen::Index>(dom.dim());
    AntipodeSides rhs = antipode_sides(p, c, h, hi, VMorphism::zero(dom, cod));
    const Eigen::Index n1 = rhs.first_rhs.matrix().size(), n2 = rhs.second_rhs.matrix().size();
    // one column per unknown entry of σ_h, both equations stacked
    Matrix A(n1 + n2, rows * cols);
    Matrix b(n1 + n2, 1);
    b << rhs.first_rhs.matrix().reshaped(), rhs.second_rhs.matrix().reshaped();
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) {
        Matrix e = Matrix::Zero(rows, cols);
        e(i, j) = Rational(1);
        AntipodeSides s = antipode_sides(p, c, h, hi, VMorphism(dom, cod, e));
        A.col(i * cols + j) << s.first_lhs.matrix().reshaped(), s.second_lhs.matrix().reshaped();
      }
    auto sol = solve_exact(A, b);
    const std::string where = at(p, h);
    if (!sol.solution) return {std::nullopt, "antipode equations at " + where + " are inconsistent (" + sol.witness + ")"};
    if (!sol.unique) return {std::nullopt, "antipode equations at " + where + " do not determine the antipode"};
    Matrix x(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) x(i, j) = (*sol.solution)(i * cols + j, 0);
    return {std::vector<VMorphism>{VMorphism(dom, cod, std::move(x))}, ""};
  });
  std::vector<VMorphism> sigma;
  for (auto& s : solved) {
    if (!s.sigma) return s;
    sigma.push_back(std::move(s.sigma->front()));
  }
  return {std::move(sigma), ""};
}

// ---- group monoids ----

VMonad to_monad(const GroupMonoidPresentation& g) {
  VMonad p;
  p.shape = monoid_category(g.elements, g.table, g.unit, "G");
  p.base = {VectBackend::Obj0{}};
  p.F = g.g;
  p.mu = g.mu;
  p.eta = {g.eta};
  return p;
}

Report check_antipode_group(const GroupMonoidPresentation& g) {
  if (!g.comonoid || !g.antipode) {
    Report r("antipode");
    r.fail("input", g.comonoid ? "no antipode given" : "no comultiplication given");
    return r;
  }
  return check_antipode(to_monad(g), *g.comonoid, *g.antipode);
}

// ---- enriched categories ----

VMonad to_monad(const EnrichedCatPresentation& e) {
  const std::size_t n = e.objects.size();
  VMonad p;
  p.shape = indiscrete_category(e.objects, "X");
  p.base.assign(n, VectBackend::Obj0{});
  p.F = e.a;
  for (const auto& [xyz, m] : e.mu) {
    auto [x, y, z] = xyz;
    p.mu.emplace(std::pair{x * n + y, y * n + z}, m);
  }
  p.eta = e.eta;
  return p;
}

Report check_antipode_enriched(const EnrichedCatPresentation& e) {
  if (!e.comonoid || !e.antipode) {
    Report r("antipode");
    r.fail("input", e.comonoid ? "no antipode given" : "no comultiplication given");
    return r;
  }
  return check_antipode(to_monad(e), *e.comonoid, *e.antipode);
}

namespace {

std::string show(const EnrichedCatPresentation& e, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ",";
    s += e.objects[i].str();
    first = false;
  }
  return s + ")";
}

void module_axioms(const EnrichedCatPresentation& e, const BCVModule& m, const std::string& prefix, Report& r) {
  const std::size_t n = e.objects.size();
  auto A = [&](std::size_t x, std::size_t y) -> const VObject& { return e.a[x * n + y]; };
  auto V = [&](std::size_t x, std::size_t y) -> const VObject& { return m.v[x * n + y]; };
  if (m.v.size() != n * n) {
    r.fail(prefix + "boundary", "need one object per pair of objects");
    return;
  }
  bool typed = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto it = m.psi.find({x, y, z});
        if (it == m.psi.end()) {
          r.fail(prefix + show(e, {x, y, z}), "no action given");
          typed = false;
        } else if (!(it->second.dom() == tensor_obj(A(x, y), V(y, z))) || !(it->second.cod() == V(x, z))) {
          r.fail(prefix + show(e, {x, y, z}),
                 "action has type " + it->second.dom().str() + " -> " + it->second.cod().str());
          typed = false;
        }
      }
  if (!typed) return;
  auto psi = [&](std::size_t x, std::size_t y, std::size_t z) -> const VMorphism& { return m.psi.at({x, y, z}); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      r.count();
      if (auto d = first_difference(psi(x, x, y) * tensor_mor(e.eta[x], VMorphism::identity(V(x, y))),
                                    VMorphism::identity(V(x, y))))
        r.fail(prefix + "unit at " + show(e, {x, y}), *d);
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u) {
          r.count();
          VMorphism lhs = psi(x, y, u) * tensor_mor(VMorphism::identity(A(x, y)), psi(y, z, u));
          VMorphism rhs = psi(x, z, u) * tensor_mor(e.mu.at({x, y, z}), VMorphism::identity(V(z, u)));
          if (auto d = first_difference(lhs, rhs)) r.fail(prefix + "associativity at " + show(e, {x, y, z, u}), *d);
        }
    }
}

}  // namespace

Report check_bcv_module(const VectBackend& bk, const EnrichedCatPresentation& e, const BCVModule& m) {
  Report r("enriched module");
  guarded(r, "module", [&] {
    module_axioms(e, m, "", r);
    if (!r.passed() || !e.comonoid) return;
    module_axioms(e, bcv_product(bk, e, m, m), "product with itself: ", r);
    module_axioms(e, bcv_product(bk, e, m, bcv_unit_module(e)), "product with the unit: ", r);
  });
  return r;
}

Report check_bcv_morphism(const EnrichedCatPresentation& e, const BCVModule& from, const BCVModule& to,
                          const std::vector<VMorphism>& phi) {
  Report r("enriched module morphism");
  const std::size_t n = e.objects.size();
  if (phi.size() != n * n) {
    r.fail("boundary", "need one component per pair of objects");
    return r;
  }
  guarded(r, "morphism", [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          r.count();
          VMorphism lhs = phi[x * n + z] * from.psi.at({x, y, z});
          VMorphism rhs = to.psi.at({x, y, z}) * tensor_mor(VMorphism::identity(e.a[x * n + y]), phi[y * n + z]);
          if (auto d = first_difference(lhs, rhs)) r.fail(show(e, {x, y, z}), *d);
        }
  });
  return r;
}

BCVModule bcv_unit_module(const EnrichedCatPresentation& e) {
  if (!e.comonoid) throw std::invalid_argument("the unit module needs counits");
  const std::size_t n = e.objects.size();
  BCVModule m{std::vector<VObject>(n * n, VObject::unit()), {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) m.psi.emplace(std::array{x, y, z}, e.comonoid->epsilon[x * n + y]);
  return m;
}

BCVModule bcv_regular_module(const EnrichedCatPresentation& e) { return {e.a, e.mu}; }

BCVModule bcv_product(const VectBackend& bk, const EnrichedCatPresentation& e, const BCVModule& m,
                      const BCVModule& w) {
  if (!e.comonoid) throw std::invalid_argument("the product of modules needs comultiplications");
  const std::size_t n = e.objects.size();
  BCVModule out;
  for (std::size_t i = 0; i < n * n; ++i) out.v.push_back(tensor_obj(m.v[i], w.v[i]));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const VObject& a = e.a[x * n + y];
        const VObject &v = m.v[y * n + z], &u = w.v[y * n + z];
        VMorphism split = tensor_mor(e.comonoid->delta[x * n + y], VMorphism::identity(tensor_obj(v, u)));
        VMorphism swap = tensor_mor(tensor_mor(VMorphism::identity(a), braiding(a, v, bk.q)), VMorphism::identity(u));
        out.psi.emplace(std::array{x, y, z}, tensor_mor(m.psi.at({x, y, z}), w.psi.at({x, y, z})) * swap * split);
      }
  return out;
}

}  // namespace spanv
