#include "spanv/monoidale.hpp"

#include <stdexcept>

#include "spanv/walk.hpp"

namespace spanv {

namespace {

// Structure 1-cells are built without a braid parameter in sight; only the
// 2-cell components of the interchanger ever consult q.
const VectBackend& plain() {
  static const VectBackend bk{BraidParam(Rational(1))};
  return bk;
}

std::vector<VObject> k_labels(std::size_t n) { return std::vector<VObject>(n, VObject::unit()); }

VCell1 bijection_cell(const VCell0& src, const VCell0& tgt, const FinFn& f) {
  return VCell1(plain(), src, tgt, Span(f, FinFn::identity(src.carrier)), k_labels(src.carrier.size()));
}

// A 2-cell between explicitly given 1-cells, its span map computed on atoms.
template <class F>
VCell2 atom_cell(const VectBackend& bk, const VCell1& from, const VCell1& to, F&& f, std::vector<VMorphism> comps) {
  return VCell2(bk, from, to, FinFn::from_atoms(from.apex(), to.apex(), std::forward<F>(f)), std::move(comps));
}

std::vector<VMorphism> identities(const VCell1& a) {
  std::vector<VMorphism> out;
  for (const auto& l : a.labels()) out.push_back(VMorphism::identity(l));
  return out;
}

VCell1 complete_between(const VCell0& src, const VCell0& tgt) {
  FinSet apex = product(tgt.carrier, src.carrier);
  return VCell1(plain(), src, tgt,
                Span(FinFn::first_projection(tgt.carrier, src.carrier), FinFn::second_projection(tgt.carrier, src.carrier)),
                k_labels(apex.size()));
}

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
  if (auto e = eq2(bk, u, v); !e) r.fail(where, e.witness);
}

}  // namespace

// ---- structural 1-cells ----

VCell1 tensor_associator(const VCell0& x, const VCell0& y, const VCell0& z) {
  const auto& bk = plain();
  VCell0 src = tensor0(bk, tensor0(bk, x, y), z), tgt = tensor0(bk, x, tensor0(bk, y, z));
  return bijection_cell(src, tgt, FinFn::from_atoms(src.carrier, tgt.carrier, [](Atom e) {
                          return Atom::pair(e.first().first(), Atom::pair(e.first().second(), e.second()));
                        }));
}

VCell1 tensor_associator_inverse(const VCell0& x, const VCell0& y, const VCell0& z) {
  const auto& bk = plain();
  VCell0 src = tensor0(bk, x, tensor0(bk, y, z)), tgt = tensor0(bk, tensor0(bk, x, y), z);
  return bijection_cell(src, tgt, FinFn::from_atoms(src.carrier, tgt.carrier, [](Atom e) {
                          return Atom::pair(Atom::pair(e.first(), e.second().first()), e.second().second());
                        }));
}

VCell1 left_unit_cell(const VCell0& x) {
  VCell0 src = tensor0(plain(), unit_cell0(plain()), x);
  return bijection_cell(src, x, FinFn::from_atoms(src.carrier, x.carrier, [](Atom e) { return e.second(); }));
}

VCell1 right_unit_cell(const VCell0& x) {
  VCell0 src = tensor0(plain(), x, unit_cell0(plain()));
  return bijection_cell(src, x, FinFn::from_atoms(src.carrier, x.carrier, [](Atom e) { return e.first(); }));
}

// ---- monoidales ----

MonoidaleData induced_monoidale(const VectBackend& bk, const FinSet& xs) {
  VCell0 x = constant_cell0<VectBackend>(xs, {});
  VCell0 xx = tensor0(bk, x, x);
  VCell1 m(bk, xx, x, Span(FinFn::identity(xs), FinFn::diagonal(xs)), k_labels(xs.size()));
  VCell1 u(bk, unit_cell0(bk), x, Span(FinFn::identity(xs), FinFn::terminal(xs)), k_labels(xs.size()));
  VCell1 id = identity1(bk, x);
  VCell2 alpha = structural2(bk, hcomp1(bk, m, tensor1(bk, m, id)),
                             hcomp1(bk, m, hcomp1(bk, tensor1(bk, id, m), tensor_associator(x, x, x))));
  VCell2 lambda = structural2(bk, hcomp1(bk, m, tensor1(bk, u, id)), left_unit_cell(x));
  VCell2 rho = structural2(bk, hcomp1(bk, m, tensor1(bk, id, u)), right_unit_cell(x));
  return {x, m, u, alpha, lambda, rho};
}

Report check_monoidale(const VectBackend& bk, const MonoidaleData& mon) {
  Report r("monoidale");
  const VCell0& x = mon.base;
  const VCell1& m = mon.m;
  const VCell1& u = mon.u;
  VCell1 id = identity1(bk, x);
  VCell1 a = tensor_associator(x, x, x);
  VCell1 m1 = tensor1(bk, m, id), _1m = tensor1(bk, id, m);

  auto boundary = [&](const std::string& name, const VCell2& cell, const VCell1& from, const VCell1& to) {
    r.count();
    if (auto d = cell1_difference(bk, cell.from(), from)) return r.fail(name, "source: " + *d);
    if (auto d = cell1_difference(bk, cell.to(), to)) return r.fail(name, "target: " + *d);
    if (auto inv = invert2(bk, cell); !inv) r.fail(name, inv.witness);
  };
  guarded(r, "alpha", [&] { boundary("alpha", mon.alpha, hcomp1(bk, m, m1), hcomp1(bk, m, hcomp1(bk, _1m, a))); });
  guarded(r, "lambda",
          [&] { boundary("lambda", mon.lambda, hcomp1(bk, m, tensor1(bk, u, id)), left_unit_cell(x)); });
  guarded(r, "rho", [&] { boundary("rho", mon.rho, hcomp1(bk, m, tensor1(bk, id, u)), right_unit_cell(x)); });
  if (!r.passed()) return r;

  VCell0 xx = tensor0(bk, x, x);
  guarded(r, "pentagon", [&] {
    // two applications of alpha, moving the first m past the associator
    Walk two(bk, {m, m1, tensor1(bk, m1, id)});
    two.apply(0, 2, mon.alpha, {m, _1m, a})
        .to({m, _1m, tensor1(bk, m, identity1(bk, xx)), tensor_associator(xx, x, x)})
        .to({m, m1, tensor1(bk, identity1(bk, xx), m), tensor_associator(xx, x, x)})
        .apply(0, 2, mon.alpha, {m, _1m, a})
        .to({m, _1m, tensor1(bk, id, _1m), tensor_associator(x, x, xx), tensor_associator(xx, x, x)});
    // three applications: alpha⊗1, alpha, 1⊗alpha
    VCell1 mm1 = hcomp1(bk, m, m1), m1ma = hcomp1(bk, m, hcomp1(bk, _1m, a));
    Walk three(bk, {m, m1, tensor1(bk, m1, id)});
    three.to({m, tensor1(bk, mm1, id)})
        .apply(1, 1, tensor2(bk, mon.alpha, identity2(bk, id)), {tensor1(bk, m1ma, id)})
        .to({m, m1, tensor1(bk, _1m, id), tensor1(bk, a, id)})
        .apply(0, 2, mon.alpha, {m, _1m, a})
        .to({m, _1m, tensor1(bk, id, m1), tensor_associator(x, xx, x), tensor1(bk, a, id)})
        .to({m, tensor1(bk, id, mm1), tensor_associator(x, xx, x), tensor1(bk, a, id)})
        .apply(1, 1, tensor2(bk, identity2(bk, id), mon.alpha), {tensor1(bk, id, m1ma)})
        .to({m, _1m, tensor1(bk, id, _1m), tensor1(bk, id, a), tensor_associator(x, xx, x), tensor1(bk, a, id)});
    compare(bk, r, "pentagon", two.cell(), vcomp2(bk, structural2(bk, three.end(), two.end()), three.cell()));
  });
  guarded(r, "triangle", [&] {
    VCell1 start = tensor1(bk, tensor1(bk, id, u), id);
    Walk via_rho(bk, {m, m1, start});
    via_rho.to({m, tensor1(bk, hcomp1(bk, m, tensor1(bk, id, u)), id)})
        .apply(1, 1, tensor2(bk, mon.rho, identity2(bk, id)), {tensor1(bk, right_unit_cell(x), id)});
    Walk via_lambda(bk, {m, m1, start});
    VCell0 one = unit_cell0(bk);
    via_lambda.apply(0, 2, mon.alpha, {m, _1m, a})
        .to({m, _1m, tensor1(bk, id, tensor1(bk, u, id)), tensor_associator(x, one, x)})
        .to({m, tensor1(bk, id, hcomp1(bk, m, tensor1(bk, u, id))), tensor_associator(x, one, x)})
        .apply(1, 1, tensor2(bk, identity2(bk, id), mon.lambda), {tensor1(bk, id, left_unit_cell(x))});
    compare(bk, r, "triangle", via_rho.cell(),
            vcomp2(bk, structural2(bk, via_lambda.end(), via_rho.end()), via_lambda.cell()));
  });
  return r;
}

// ---- adjunctions and the Frobenius cells ----

OpmapAdjunctions opmap_adjunctions(const VectBackend& bk, const MonoidaleData& mon) {
  auto reversed = [&](const VCell1& c) {
    return VCell1(bk, c.tgt(), c.src(), Span(c.span().right(), c.span().left()), c.labels());
  };
  VCell1 ms = reversed(mon.m), us = reversed(mon.u);
  // For a span with left leg a bijection these are the unit and counit of
  // graph ⊣ cograph in Span; with K labels every component is 1.
  VCell2 m_unit = structural2(bk, identity1(bk, mon.m.tgt()), hcomp1(bk, mon.m, ms));
  VCell2 m_counit = structural2(bk, hcomp1(bk, ms, mon.m), identity1(bk, mon.m.src()));
  VCell2 u_unit = structural2(bk, identity1(bk, mon.u.tgt()), hcomp1(bk, mon.u, us));
  VCell2 u_counit = structural2(bk, hcomp1(bk, us, mon.u), identity1(bk, mon.u.src()));
  return {ms, us, m_unit, m_counit, u_unit, u_counit};
}

Report check_adjunction(const VectBackend& bk, const VCell1& f, const VCell1& g, const VCell2& unit,
                        const VCell2& counit, const std::string& name) {
  Report r(name);
  guarded(r, name + " left triangle", [&] {
    VCell2 t = chain(bk, std::vector<VCell2>{inverse2(bk, right_unitor2(bk, f)), hcomp2(bk, identity2(bk, f), unit),
                                             inverse2(bk, associator2(bk, f, g, f)),
                                             hcomp2(bk, counit, identity2(bk, f)), left_unitor2(bk, f)});
    compare(bk, r, name + " left triangle", t, identity2(bk, f));
  });
  guarded(r, name + " right triangle", [&] {
    VCell2 t = chain(bk, std::vector<VCell2>{inverse2(bk, left_unitor2(bk, g)), hcomp2(bk, unit, identity2(bk, g)),
                                             associator2(bk, g, f, g), hcomp2(bk, identity2(bk, g), counit),
                                             right_unitor2(bk, g)});
    compare(bk, r, name + " right triangle", t, identity2(bk, g));
  });
  return r;
}

FrobeniusCells frobenius_cells(const VectBackend& bk, const MonoidaleData& mon, const OpmapAdjunctions& adj) {
  const VCell0& x = mon.base;
  const VCell1& m = mon.m;
  const VCell1& ms = adj.m_star;
  VCell1 id = identity1(bk, x), xx = identity1(bk, m.src());
  VCell1 a = tensor_associator(x, x, x), ai = tensor_associator_inverse(x, x, x);
  VCell1 m1 = tensor1(bk, m, id), _1m = tensor1(bk, id, m);

  Walk left(bk, {ms, m});
  left.to({ms, m, tensor1(bk, id, id)})
      .apply(2, 1, tensor2(bk, adj.m_unit, identity2(bk, id)), {tensor1(bk, hcomp1(bk, m, ms), id)})
      .to({ms, m, m1, tensor1(bk, ms, id)})
      .apply(1, 2, mon.alpha, {m, _1m, a})
      .apply(0, 2, adj.m_counit, {xx})
      .to({_1m, a, tensor1(bk, ms, id)});

  Walk alpha_prime(bk, {m, _1m});
  alpha_prime.to({m, _1m, a, ai}).apply(0, 3, inverse2(bk, mon.alpha), {m, m1}).to({m, m1, ai});

  Walk right(bk, {ms, m});
  right.to({ms, m, tensor1(bk, id, id)})
      .apply(2, 1, tensor2(bk, identity2(bk, id), adj.m_unit), {tensor1(bk, id, hcomp1(bk, m, ms))})
      .to({ms, m, _1m, tensor1(bk, id, ms)})
      .apply(1, 2, alpha_prime.cell(), {m, m1, ai})
      .apply(0, 2, adj.m_counit, {xx})
      .to({m1, ai, tensor1(bk, id, ms)});
  return {left.cell(), right.cell()};
}

Report check_frobenius(const VectBackend& bk, const MonoidaleData& mon, const OpmapAdjunctions& adj) {
  Report r("frobenius");
  guarded(r, "frobenius", [&] {
    FrobeniusCells cells = frobenius_cells(bk, mon, adj);
    for (auto [name, cell] : {std::pair<const char*, const VCell2*>{"left Frobenius cell", &cells.left},
                              {"right Frobenius cell", &cells.right}}) {
      r.count();
      if (auto inv = invert2(bk, *cell); !inv) r.fail(name, inv.witness);
    }
  });
  return r;
}

// ---- convolution ----

VCell1 star1(const VectBackend& bk, const VCell1& b, const VCell1& a) {
  if (auto d = cell0_difference(bk, b.src(), a.src())) throw BoundaryError("convolution sources: " + *d);
  if (auto d = cell0_difference(bk, b.tgt(), a.tgt())) throw BoundaryError("convolution targets: " + *d);
  std::vector<Atom> apex;
  std::vector<std::size_t> left, right;
  std::vector<VObject> labels;
  for (std::size_t c = 0; c < b.apex().size(); ++c)
    for (std::size_t h = 0; h < a.apex().size(); ++h)
      if (b.span().left()(c) == a.span().left()(h) && b.span().right()(c) == a.span().right()(h)) {
        apex.push_back(Atom::pair(b.apex()[c], a.apex()[h]));
        left.push_back(b.span().left()(c));
        right.push_back(b.span().right()(c));
        labels.push_back(tensor_obj(b.label(c), a.label(h)));
      }
  FinSet ap(std::move(apex));
  return VCell1(Unchecked{}, b.src(), b.tgt(),
                Span(FinFn(ap, b.tgt().carrier, std::move(left)), FinFn(ap, b.src().carrier, std::move(right))),
                std::move(labels));
}

VCell2 star2(const VectBackend& bk, const VCell2& g, const VCell2& f) {
  VCell1 from = star1(bk, g.from(), f.from()), to = star1(bk, g.to(), f.to());
  std::vector<VMorphism> comps;
  for (Atom e : from.apex().elements()) {
    std::size_t c = g.from().apex().index_of(e.first()), h = f.from().apex().index_of(e.second());
    comps.push_back(tensor_mor(g.component(c), f.component(h)));
  }
  return atom_cell(
      bk, from, to, [&](Atom e) { return Atom::pair(g.map()(e.first()), f.map()(e.second())); }, std::move(comps));
}

VCell2 star_associator(const VectBackend& bk, const VCell1& c, const VCell1& b, const VCell1& a) {
  VCell1 from = star1(bk, star1(bk, c, b), a);
  return atom_cell(
      bk, from, star1(bk, c, star1(bk, b, a)),
      [](Atom e) { return Atom::pair(e.first().first(), Atom::pair(e.first().second(), e.second())); },
      identities(from));
}

VCell2 star_left_unitor(const VectBackend& bk, const VCell1& a) {
  VCell1 from = star1(bk, complete_between(a.src(), a.tgt()), a);
  return atom_cell(bk, from, a, [](Atom e) { return e.second(); }, identities(from));
}

VCell2 star_right_unitor(const VectBackend& bk, const VCell1& a) {
  VCell1 from = star1(bk, a, complete_between(a.src(), a.tgt()));
  return atom_cell(bk, from, a, [](Atom e) { return e.first(); }, identities(from));
}

VCell2 duoidal_interchange(const VectBackend& bk, const VCell1& a, const VCell1& b, const VCell1& h, const VCell1& d) {
  VCell1 from = hcomp1(bk, star1(bk, a, b), star1(bk, h, d));
  VCell1 to = star1(bk, hcomp1(bk, a, h), hcomp1(bk, b, d));
  std::vector<VMorphism> comps;
  for (Atom e : from.apex().elements()) {
    Atom pq = e.first(), vw = e.second();
    comps.push_back(bk.interchange(a.label(a.apex().index_of(pq.first())), b.label(b.apex().index_of(pq.second())),
                                   h.label(h.apex().index_of(vw.first())), d.label(d.apex().index_of(vw.second()))));
  }
  return atom_cell(
      bk, from, to,
      [](Atom e) {
        return Atom::pair(Atom::pair(e.first().first(), e.second().first()),
                          Atom::pair(e.first().second(), e.second().second()));
      },
      std::move(comps));
}

VCell1 unit_span(const VCell0& x) { return identity1(plain(), x); }

VCell1 complete_span(const VCell0& x) { return complete_between(x, x); }

DuoidalUnits duoidal_units(const VectBackend& bk, const VCell0& x) {
  VCell1 I = unit_span(x), J = complete_span(x);
  VCell1 jj = hcomp1(bk, J, J), ii = star1(bk, I, I);
  VCell2 mu = atom_cell(
      bk, jj, J, [](Atom e) { return Atom::pair(e.first().first(), e.second().second()); }, identities(jj));
  VCell2 delta = atom_cell(bk, I, ii, [](Atom e) { return Atom::pair(e, e); }, identities(I));
  VCell2 iota = atom_cell(bk, I, J, [](Atom e) { return Atom::pair(e, e); }, identities(I));
  return {I, J, mu, delta, iota};
}

Report check_duoidal_at(const VectBackend& bk, const DuoidalUnits& un, const std::vector<VCell1>& six) {
  if (six.size() != 6) throw std::invalid_argument("duoidal axioms take six endo-cells");
  Report r("duoidal");
  const VCell1 &A = six[0], &B = six[1], &C = six[2], &D = six[3], &E = six[4], &F = six[5];
  const VCell1 &I = un.I, &J = un.J;
  auto Z = [&](const VCell1& a, const VCell1& b, const VCell1& h, const VCell1& d) {
    return duoidal_interchange(bk, a, b, h, d);
  };
  auto S = [&](const VCell1& b, const VCell1& a) { return star1(bk, b, a); };
  auto O = [&](const VCell1& b, const VCell1& a) { return hcomp1(bk, b, a); };
  auto id = [&](const VCell1& a) { return identity2(bk, a); };
  auto ch = [&](std::vector<VCell2> steps) { return chain(bk, steps); };

  guarded(r, "zeta vs circ-associator", [&] {
    compare(bk, r, "zeta vs circ-associator",
            ch({hcomp2(bk, Z(A, B, C, D), id(S(E, F))), Z(O(A, C), O(B, D), E, F),
                star2(bk, associator2(bk, A, C, E), associator2(bk, B, D, F))}),
            ch({associator2(bk, S(A, B), S(C, D), S(E, F)), hcomp2(bk, id(S(A, B)), Z(C, D, E, F)),
                Z(A, B, O(C, E), O(D, F))}));
  });
  guarded(r, "zeta vs star-associator", [&] {
    compare(bk, r, "zeta vs star-associator",
            ch({Z(S(A, B), C, S(D, E), F), star2(bk, Z(A, B, D, E), id(O(C, F))),
                star_associator(bk, O(A, D), O(B, E), O(C, F))}),
            ch({hcomp2(bk, star_associator(bk, A, B, C), star_associator(bk, D, E, F)), Z(A, S(B, C), D, S(E, F)),
                star2(bk, id(O(A, D)), Z(B, C, E, F))}));
  });
  guarded(r, "zeta vs I (left)", [&] {
    compare(bk, r, "zeta vs I (left)",
            ch({hcomp2(bk, un.delta_I, id(S(A, B))), Z(I, I, A, B),
                star2(bk, left_unitor2(bk, A), left_unitor2(bk, B))}),
            left_unitor2(bk, S(A, B)));
  });
  guarded(r, "zeta vs I (right)", [&] {
    compare(bk, r, "zeta vs I (right)",
            ch({hcomp2(bk, id(S(A, B)), un.delta_I), Z(A, B, I, I),
                star2(bk, right_unitor2(bk, A), right_unitor2(bk, B))}),
            right_unitor2(bk, S(A, B)));
  });
  guarded(r, "zeta vs J (left)", [&] {
    compare(bk, r, "zeta vs J (left)",
            ch({Z(J, A, J, B), star2(bk, un.mu_J, id(O(A, B))), star_left_unitor(bk, O(A, B))}),
            hcomp2(bk, star_left_unitor(bk, A), star_left_unitor(bk, B)));
  });
  guarded(r, "zeta vs J (right)", [&] {
    compare(bk, r, "zeta vs J (right)",
            ch({Z(A, J, B, J), star2(bk, id(O(A, B)), un.mu_J), star_right_unitor(bk, O(A, B))}),
            hcomp2(bk, star_right_unitor(bk, A), star_right_unitor(bk, B)));
  });
  guarded(r, "J monoid", [&] {
    compare(bk, r, "J associativity", ch({hcomp2(bk, un.mu_J, id(J)), un.mu_J}),
            ch({associator2(bk, J, J, J), hcomp2(bk, id(J), un.mu_J), un.mu_J}));
    compare(bk, r, "J left unit", ch({hcomp2(bk, un.iota, id(J)), un.mu_J}), left_unitor2(bk, J));
    compare(bk, r, "J right unit", ch({hcomp2(bk, id(J), un.iota), un.mu_J}), right_unitor2(bk, J));
  });
  guarded(r, "I comonoid", [&] {
    compare(bk, r, "I coassociativity",
            ch({un.delta_I, star2(bk, un.delta_I, id(I)), star_associator(bk, I, I, I)}),
            ch({un.delta_I, star2(bk, id(I), un.delta_I)}));
    compare(bk, r, "I left counit", ch({un.delta_I, star2(bk, un.iota, id(I)), star_left_unitor(bk, I)}), id(I));
    compare(bk, r, "I right counit", ch({un.delta_I, star2(bk, id(I), un.iota), star_right_unitor(bk, I)}), id(I));
  });
  return r;
}

// ---- comonoid labels ----

Report check_comonoid_cell(const ComonoidLabeledCell& c) {
  Report r("comonoid cell");
  const VCell1& a = c.cell;
  if (c.delta.size() != a.apex().size() || c.epsilon.size() != a.apex().size()) {
    r.fail("comonoid cell", "need one comultiplication and one counit per apex element");
    return r;
  }
  for (std::size_t h = 0; h < a.apex().size(); ++h) {
    const std::string at = a.apex()[h].str();
    const VObject& x = a.label(h);
    const VMorphism &d = c.delta[h], &e = c.epsilon[h];
    r.count();
    if (!(d.dom() == x) || !(d.cod() == tensor_obj(x, x))) {
      r.fail(at, "comultiplication has type " + d.dom().str() + " -> " + d.cod().str());
      continue;
    }
    if (!(e.dom() == x) || !(e.cod() == VObject::unit())) {
      r.fail(at, "counit has type " + e.dom().str() + " -> " + e.cod().str());
      continue;
    }
    if (!d.is_degree_preserving() || !e.is_degree_preserving()) r.fail(at, "structure maps do not preserve grading");
    VMorphism one = VMorphism::identity(x);
    if (auto diff = first_difference(tensor_mor(d, one) * d, tensor_mor(one, d) * d))
      r.fail(at, "not coassociative: " + *diff);
    if (auto diff = first_difference(tensor_mor(e, one) * d, one)) r.fail(at, "not left counital: " + *diff);
    if (auto diff = first_difference(tensor_mor(one, e) * d, one)) r.fail(at, "not right counital: " + *diff);
  }
  return r;
}

VCell2 comultiplication2(const VectBackend& bk, const ComonoidLabeledCell& c) {
  return atom_cell(bk, c.cell, star1(bk, c.cell, c.cell), [](Atom e) { return Atom::pair(e, e); }, c.delta);
}

VCell2 counit2(const VectBackend& bk, const ComonoidLabeledCell& c) {
  const VCell1& a = c.cell;
  VCell1 J = complete_between(a.src(), a.tgt());
  std::vector<std::size_t> map;
  for (std::size_t h = 0; h < a.apex().size(); ++h)
    map.push_back(a.span().left()(h) * a.src().carrier.size() + a.span().right()(h));
  return VCell2(bk, a, J, FinFn(a.apex(), J.apex(), std::move(map)), c.epsilon);
}

// ---- the singleton carrier ----

namespace {

// Over the singleton b•a and b∘a are the same 1-cell up to the carrier of
// the pullback; this re-reads one as the other on identical atoms.
VCell2 same_atoms(const VectBackend& bk, const VCell1& from, const VCell1& to) {
  return atom_cell(bk, from, to, [](Atom e) { return e; }, identities(from));
}

}  // namespace

VCell2 zunino_braiding(const VectBackend& bk, const VCell1& a, const VCell1& b) {
  DuoidalUnits un = duoidal_units(bk, a.src());
  VCell2 drop_left = chain(bk, std::vector<VCell2>{inverse2(bk, hcomp2(bk, un.iota, identity2(bk, b))),
                                                   left_unitor2(bk, b)});
  VCell2 drop_right = chain(bk, std::vector<VCell2>{inverse2(bk, hcomp2(bk, identity2(bk, a), un.iota)),
                                                    right_unitor2(bk, a)});
  return chain(bk, std::vector<VCell2>{
                       hcomp2(bk, inverse2(bk, star_left_unitor(bk, a)), inverse2(bk, star_right_unitor(bk, b))),
                       duoidal_interchange(bk, un.J, a, b, un.J), star2(bk, drop_left, drop_right),
                       same_atoms(bk, star1(bk, b, a), hcomp1(bk, b, a))});
}

Report zunino_check(const VectBackend& bk, const std::vector<VCell1>& cells) {
  Report r("zunino");
  if (cells.empty()) return r;
  const VCell0& x = cells.front().src();
  if (x.carrier.size() != 1) {
    r.fail("carrier", "expected a singleton, got " + x.carrier.str());
    return r;
  }
  DuoidalUnits un = duoidal_units(bk, x);
  r.count();
  if (auto inv = invert2(bk, un.iota); !inv) r.fail("I -> J", inv.witness);
  auto braid = [&](const VCell1& a, const VCell1& b) { return zunino_braiding(bk, a, b); };
  for (const auto& a : cells) {
    guarded(r, "unitors at " + a.apex().str(), [&] {
      compare(bk, r, "left unitors", left_unitor2(bk, a),
              vcomp2(bk, star_left_unitor(bk, a), star2(bk, un.iota, identity2(bk, a))));
      compare(bk, r, "right unitors", right_unitor2(bk, a),
              vcomp2(bk, star_right_unitor(bk, a), star2(bk, identity2(bk, a), un.iota)));
    });
    for (const auto& b : cells) {
      r.count();
      if (auto d = cell1_difference(bk, hcomp1(bk, b, a), star1(bk, b, a))) r.fail("products", *d);
      for (const auto& c : cells) {
        guarded(r, "triple", [&] {
          compare(bk, r, "associators", associator2(bk, c, b, a), star_associator(bk, c, b, a));
          compare(bk, r, "hexagon (a, b∘c)", braid(a, hcomp1(bk, b, c)),
                  chain(bk, std::vector<VCell2>{inverse2(bk, associator2(bk, a, b, c)),
                                                hcomp2(bk, braid(a, b), identity2(bk, c)), associator2(bk, b, a, c),
                                                hcomp2(bk, identity2(bk, b), braid(a, c)),
                                                inverse2(bk, associator2(bk, b, c, a))}));
          compare(bk, r, "hexagon (a∘b, c)", braid(hcomp1(bk, a, b), c),
                  chain(bk, std::vector<VCell2>{associator2(bk, a, b, c), hcomp2(bk, identity2(bk, a), braid(b, c)),
                                                inverse2(bk, associator2(bk, a, c, b)),
                                                hcomp2(bk, braid(a, c), identity2(bk, b)),
                                                associator2(bk, c, a, b)}));
        });
      }
    }
  }
  return r;
}

}  // namespace spanv
