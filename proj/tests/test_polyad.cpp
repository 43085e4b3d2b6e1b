#include <random>

#include "doctest.h"
#include "spanv/polyad.hpp"
#include "support/em_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/polyads.hpp"

using namespace spanv;
using namespace spanv::testing;

namespace {

void check_against_oracles(const PolyadPresentation& d) {
  ModuleCategory m = enumerate_modules(d);
  Counts om = oracle_modules(d);
  CHECK(m.objects.size() == om.objects);
  CHECK(m.morphisms.size() == om.morphisms);
  CHECK(m.category->num_objects() == om.objects);
  ModuleCategory r = enumerate_representations(d);
  Counts orr = oracle_representations(d);
  CHECK(r.objects.size() == orr.objects);
  CHECK(r.morphisms.size() == orr.morphisms);

  EMComparison em = em_algebras_restricted(d);
  CHECK_MESSAGE(em.report.passed(), em.report.summary());
  CHECK(em.algebras.objects.size() == om.objects);
  CHECK(em.to_algebras.has_value());
  EMComparison er = em_representations_restricted(d);
  CHECK_MESSAGE(er.report.passed(), er.report.summary());
  CHECK(er.algebras.morphisms.size() == orr.morphisms);
}

FinCategoryPtr idempotent_shape() {
  MonoidTable m = idempotent();
  return monoid_category(m.elements, m.table, m.unit);
}

}  // namespace

TEST_CASE("translation polyad over Z2 is Hopf") {
  PolyadPresentation d = chaotic_translation();
  Report r = check_polyad(d);
  CHECK_MESSAGE(r.passed(), r.summary());
  PolyadOpmonoidal op = thin_opmonoidal(d, [](std::size_t a, std::size_t b) { return (a + b) % 2; }, 0);
  Report o = check_polyad_opmonoidal(d, op);
  CHECK_MESSAGE(o.passed(), o.summary());
  HopfVerdict v = polyad_is_hopf(d, op);
  CHECK_MESSAGE(v.hopf, v.witness);

  // component at (h,k), objects (A,B): (μ_{h,k}×1)∘d2_h(d(k)A, B)
  PolyadFusion f = polyad_fusion(d, op);
  REQUIRE(f.left.components().size() == 4);
  const FinCategory& D = *d.shape;
  const Category& C = d.base[0];
  const Functor& t = op.monoidal.tensor[0];
  for (std::size_t i = 0; i < f.left.components().size(); ++i) {
    Atom e = f.left.from().apex()[i];
    std::size_t h = D.morphism_set().index_of(e.first());
    std::size_t k = D.morphism_set().index_of(e.second().second().first());
    for (const Handle& a : C->objects())
      for (const Handle& b : C->objects()) {
        Handle oracle = C->compose(t.on_morphism(Handle::pair(d.mu.at({h, k}).at(a), C->identity(d.F[h].on_object(b)))),
                                   op.d2[h].at(Handle::pair(d.F[k].on_object(a), b)));
        CHECK(f.left.component(i).at(Handle::pair(a, b)) == oracle);
      }
    // span map (h,k) ↦ (hk, h)
    Atom img = f.left.to().apex()[f.left.map()(i)].second();
    CHECK(img == Atom::pair(D.morphism_set()[D.comp(h, k)], D.morphism_set()[h]));
  }
}

TEST_CASE("non-group shape fails the groupoid criterion") {
  FinSet z2({Atom::of(std::int64_t{0}), Atom::of(std::int64_t{1})});
  // d(z) constant at 0: lax because the target is indiscrete
  PolyadPresentation d = thin_polyad(idempotent_shape(), {indiscrete_category(z2, "C")},
                                     [](std::size_t h, std::size_t a) { return h == 0 ? a : std::size_t{0}; });
  CHECK(check_polyad(d).passed());
  PolyadOpmonoidal op = thin_opmonoidal(d, [](std::size_t a, std::size_t b) { return (a + b) % 2; }, 0);
  CHECK(check_polyad_opmonoidal(d, op).passed());
  HopfVerdict v = polyad_is_hopf(d, op);
  CHECK_FALSE(v.hopf);
  CHECK(v.witness.find("not a groupoid") != std::string::npos);
}

TEST_CASE("closure on a lattice has a singular fusion") {
  PolyadPresentation d = diamond_closure();
  CHECK(check_polyad(d).passed());
  PolyadOpmonoidal op = thin_opmonoidal(d, diamond_meet, 3);
  Report o = check_polyad_opmonoidal(d, op);
  CHECK_MESSAGE(o.passed(), o.summary());
  HopfVerdict v = polyad_is_hopf(d, op);
  CHECK_FALSE(v.hopf);
  CHECK(v.witness.find("left fusion") != std::string::npos);
  // at (A,B) = (b,a): closure(b ∧ a) = ⊥ but b ∧ closure(a) = b
  PolyadFusion f = polyad_fusion(d, op);
  Handle c = f.left.component(0).at(Handle::pair(Handle::index(2), Handle::index(1)));
  CHECK(c == d.base[0]->hom(Handle::index(0), Handle::index(2)).front());
}

TEST_CASE("broken polyads are rejected") {
  PolyadPresentation d = chaotic_translation();
  // d(1) swapped for the identity: μ_{1,1} no longer lands in d(0)
  PolyadPresentation bad = thin_polyad(d.shape, {std::static_pointer_cast<const FinCategory>(d.base[0])},
                                       [](std::size_t, std::size_t a) { return a; });
  bad.mu = d.mu;
  CHECK_FALSE(check_polyad(bad).passed());

  // a translation on a discrete category is not opmonoidal for addition
  FinSet z2({Atom::of(std::int64_t{0}), Atom::of(std::int64_t{1})});
  PolyadPresentation disc = thin_polyad(cyclic_group_category(2), {discrete_category(z2, "C")},
                                        [](std::size_t g, std::size_t a) { return (a + g) % 2; });
  CHECK(check_polyad(disc).passed());
  CHECK_THROWS(thin_opmonoidal(disc, [](std::size_t a, std::size_t b) { return (a + b) % 2; }, 0).d2.at(1).at(
      Handle::pair(Handle::index(0), Handle::index(0))));
}

TEST_CASE("module and representation counts") {
  SUBCASE("trivial polyad") {
    PolyadPresentation d = thin_polyad(cyclic_group_category(1), {terminal_category()},
                                       [](std::size_t, std::size_t a) { return a; });
    ModuleCategory m = enumerate_modules(d);
    CHECK(m.objects.size() == 1);
    CHECK(m.morphisms.size() == 1);
    EMComparison em = em_algebras_restricted(d);
    CHECK(em.report.passed());
    CHECK(em.algebras.objects.size() == 1);
  }
  SUBCASE("identity-only shape gives products of object sets") {
    FinSet two({Atom::of("x"), Atom::of("y")});
    PolyadPresentation d = thin_polyad(discrete_category(two), {chain_category(2), chain_category(3)},
                                       [](std::size_t, std::size_t a) { return a; });
    ModuleCategory m = enumerate_modules(d);
    CHECK(m.objects.size() == 2 * 3);
    CHECK(m.morphisms.size() == 3 * 6);  // comparable pairs in each chain
    check_against_oracles(d);
  }
  SUBCASE("swap on a discrete category") {
    FinSet z2({Atom::of(std::int64_t{0}), Atom::of(std::int64_t{1})});
    PolyadPresentation d = thin_polyad(cyclic_group_category(2), {discrete_category(z2, "C")},
                                       [](std::size_t g, std::size_t a) { return (a + g) % 2; });
    CHECK(enumerate_modules(d).objects.empty());
    ModuleCategory r = enumerate_representations(d);
    CHECK(r.objects.size() == 2);  // W_1 = swap W_0
    CHECK(r.morphisms.size() == 2);
    check_against_oracles(d);
  }
  SUBCASE("closure over the idempotent monoid") {
    PolyadPresentation d = thin_polyad(idempotent_shape(), {chain_category(2)},
                                       [](std::size_t h, std::size_t a) { return h == 0 ? a : std::size_t{1}; });
    REQUIRE(check_polyad(d).passed());
    CHECK(enumerate_modules(d).objects.size() == 1);
    CHECK(enumerate_representations(d).objects.size() == 2);
    check_against_oracles(d);
  }
  SUBCASE("translation and diamond") {
    check_against_oracles(chaotic_translation());
    check_against_oracles(diamond_closure());
  }
}

TEST_CASE("random thin polyads: enumeration agrees with brute force and algebras") {
  std::mt19937 rng(20261016);
  std::vector<FinCategoryPtr> shapes{cyclic_group_category(1), cyclic_group_category(2), idempotent_shape(),
                                     cyclic_group_category(3)};
  std::size_t tried = 0;
  for (int trial = 0; trial < 60 && tried < 25; ++trial) {
    FinCategoryPtr shape = shapes[rng() % shapes.size()];
    std::size_t n = 1 + rng() % 3;
    FinCategoryPtr c = chain_category(n);
    // each d(h) is the identity or the closure onto the top element
    std::vector<bool> top(shape->num_morphisms());
    for (std::size_t h = 0; h < top.size(); ++h) top[h] = rng() % 2;
    PolyadPresentation d;
    try {
      d = thin_polyad(shape, {c}, [top, n](std::size_t h, std::size_t a) { return top[h] ? n - 1 : a; });
    } catch (const std::logic_error&) {
      continue;  // some μ or η has no component
    }
    if (!check_polyad(d).passed()) continue;
    ++tried;
    CAPTURE(trial);
    check_against_oracles(d);
  }
  CHECK(tried >= 10);
}

TEST_CASE("image of V presentations under V to Cat") {
  auto bk = VectBackend{BraidParam(Rational(1))};
  Algebra z2 = monoid_algebra(cyclic(2), "g");
  std::vector<VObject> probes{VObject::unit(), z2.obj,
                              VObject({{Atom::of("p"), 0}, {Atom::of("q"), 0}, {Atom::of("r"), 0}})};

  GroupMonoidPresentation g = constant_presentation(cyclic(2), z2);
  PolyadImage img = polyad_from_vect(bk, to_monad(g), *g.comonoid, probes);
  Report r = check_polyad(img.polyad);
  CHECK_MESSAGE(r.passed(), r.summary());
  Report o = check_polyad_opmonoidal(img.polyad, img.opmonoidal);
  CHECK_MESSAGE(o.passed(), o.summary());
  HopfVerdict v = polyad_is_hopf(img.polyad, img.opmonoidal);
  CHECK_MESSAGE(v.hopf, v.witness);

  // component oracle: (μ⊗1_A⊗1_{F h⊗B})∘(1⊗c_{F h, F k⊗A}⊗1)∘(δ_h⊗1)
  PolyadFusion f = polyad_fusion(img.polyad, img.opmonoidal);
  const FinSet& G = g.elements;
  for (std::size_t i = 0; i < f.left.components().size(); ++i) {
    Atom e = f.left.from().apex()[i];
    std::size_t h = G.index_of(e.first()), k = G.index_of(e.second().second().first());
    const VObject &fh = g.g[h], &fk = g.g[k];
    for (const auto& a : probes)
      for (const auto& b : probes) {
        VObject fka = tensor_obj(fk, a);
        VMorphism expect =
            tensor_mor(tensor_mor(g.mu.at({h, k}), VMorphism::identity(a)), VMorphism::identity(tensor_obj(fh, b))) *
            tensor_mor(tensor_mor(VMorphism::identity(fh), braiding(fh, fka, bk.q)), VMorphism::identity(b)) *
            tensor_mor(g.comonoid->delta[h], VMorphism::identity(tensor_obj(fka, b)));
        CHECK(f.left.component(i).at(Handle::pair(Handle(a), Handle(b))).as_morphism() == expect);
      }
  }

  GroupMonoidPresentation t = constant_presentation(cyclic(1), unit_algebra());
  PolyadImage ti = polyad_from_vect(bk, to_monad(t), *t.comonoid, probes);
  CHECK(polyad_is_hopf(ti.polyad, ti.opmonoidal).hopf);

  EnrichedCatPresentation e = constant_enriched(points(2), z2);
  PolyadImage ei = polyad_from_vect(bk, to_monad(e), *e.comonoid, probes);
  CHECK(check_polyad(ei.polyad).passed());
  CHECK(polyad_is_hopf(ei.polyad, ei.opmonoidal).hopf);

  // non-Hopf inputs stay non-Hopf
  GroupMonoidPresentation s = constant_presentation(cyclic(1), monoid_algebra(idempotent(), "m"));
  PolyadImage si = polyad_from_vect(bk, to_monad(s), *s.comonoid, probes);
  CHECK(check_polyad(si.polyad).passed());
  HopfVerdict sv = polyad_is_hopf(si.polyad, si.opmonoidal);
  CHECK_FALSE(sv.hopf);
  GroupMonoidPresentation m = constant_presentation(idempotent(), unit_algebra());
  PolyadImage mi = polyad_from_vect(bk, to_monad(m), *m.comonoid, probes);
  CHECK(polyad_is_hopf(mi.polyad, mi.opmonoidal).witness.find("groupoid") != std::string::npos);

  // the graded case with q = -1
  auto bm = VectBackend{BraidParam(Rational(-1))};
  GroupMonoidPresentation l = constant_presentation(cyclic(1), exterior_algebra("l"));
  std::vector<VObject> graded{VObject::unit(), exterior_algebra("m").obj};
  PolyadImage li = polyad_from_vect(bm, to_monad(l), *l.comonoid, graded);
  Report lo = check_polyad_opmonoidal(li.polyad, li.opmonoidal);
  CHECK_MESSAGE(lo.passed(), lo.summary());
  CHECK(polyad_is_hopf(li.polyad, li.opmonoidal).hopf);
}
