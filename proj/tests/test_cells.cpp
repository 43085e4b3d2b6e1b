#include "doctest.h"
#include "spanv/functoriality.hpp"
#include "support/coherence.hpp"

using namespace spanv;
using namespace spanv::testing;

namespace {

VectBackend backend(long q) { return VectBackend{BraidParam(Rational(q))}; }

VCell0 singleton() { return constant_cell0<VectBackend>(FinSet::singleton(), {}); }

VCell1 group_cell(const VectBackend& bk, std::vector<VObject> labels) {
  FinSet apex = FinSet::range(labels.size());
  return VCell1(bk, singleton(), singleton(), Span(FinFn::terminal(apex), FinFn::terminal(apex)), labels);
}

}  // namespace

TEST_CASE("boundary compatibility of labeled 1-cells is enforced") {
  // Over Cat, a label whose source category differs from x(r(c)) is rejected.
  CatBackend ck;
  Category one = terminal_category();
  Category two = discrete_category(FinSet::range(2));
  Cell0<CatBackend> x{FinSet::singleton(), {one}};
  Cell0<CatBackend> y{FinSet::singleton(), {two}};
  FinSet apex({Atom::of("c")});
  Span s(FinFn::terminal(apex), FinFn::terminal(apex));
  Functor good = Functor::constant(two, Handle::index(0));
  CHECK_NOTHROW(Cell1<CatBackend>(ck, x, y, s, {good}));
  try {
    Cell1<CatBackend>(ck, y, y, s, {good});
    FAIL("expected a boundary error");
  } catch (const BoundaryError& e) {
    CHECK(std::string(e.what()).find("apex element c") != std::string::npos);
  }
}

TEST_CASE("vertical composition") {
  auto bk = backend(2);
  CellGen gen(21);
  VCell0 x = gen.carrier(2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    VCell1 c = gen.cell1(bk, x, x);
    VCell2 g = gen.cell2_into(bk, c);
    VCell2 f = gen.cell2_into(bk, g.from());
    VCell2 gf = vcomp2(bk, g, f);
    for (std::size_t i = 0; i < f.components().size(); ++i) {
      CHECK(gf.map()(i) == g.map()(f.map()(i)));
      CHECK(gf.component(i) == g.component(f.map()(i)) * f.component(i));
    }
    CHECK(eq2(bk, vcomp2(bk, identity2(bk, c), identity2(bk, c)), identity2(bk, c)));
  }
  // an invertible cell followed by its inverse
  VObject d2 = VObject::ungraded(2);
  VCell1 a = group_cell(bk, {d2});
  VMorphism m(d2, d2, (VMorphism::Matrix(2, 2) << 1, 1, 0, 1).finished());
  VCell2 t(bk, a, a, FinFn::identity(a.apex()), {m});
  auto inv = invert2(bk, t);
  REQUIRE(inv);
  CHECK(eq2(bk, vcomp2(bk, *inv.inverse, t), identity2(bk, a)));
  CHECK_THROWS_AS(vcomp2(bk, t, identity2(bk, group_cell(bk, {VObject::ungraded(3)}))), BoundaryError);
}

TEST_CASE("horizontal composition of 1-cells") {
  auto bk = backend(1);
  VObject d2 = VObject::ungraded(2, "a"), d3 = VObject::ungraded(3, "b");
  VCell1 g = group_cell(bk, {d2, d3});
  VCell1 h = group_cell(bk, {d3, VObject::unit()});
  VCell1 gh = hcomp1(bk, g, h);
  REQUIRE(gh.apex().size() == 4);
  // dimension bookkeeping: dim(b(d)) * dim(a(c)) on each pair
  std::vector<std::size_t> dims{2 * 3, 2 * 1, 3 * 3, 3 * 1};
  for (std::size_t i = 0; i < 4; ++i) CHECK(gh.label(i).dim() == dims[i]);
  VCell1 idc = identity1(bk, singleton());
  CHECK(left_unitor2(bk, g).map().is_bijective());
  CHECK(hcomp1(bk, idc, g).apex().size() == g.apex().size());
  VCell1 empty = group_cell(bk, {});
  CHECK(hcomp1(bk, empty, g).apex().empty());
  CHECK(hcomp1(bk, g, empty).apex().empty());
}

TEST_CASE("horizontal composition of 2-cells is the Kronecker product of components") {
  auto bk = backend(-1);
  CellGen gen(5);
  VCell0 x = gen.carrier(1, 2);
  for (int trial = 0; trial < 30; ++trial) {
    VCell1 b = gen.cell1(bk, x, x), a = gen.cell1(bk, x, x);
    VCell2 g = gen.cell2_into(bk, b), f = gen.cell2_into(bk, a);
    VCell2 gf = hcomp2(bk, g, f);
    auto pairs = pullback_indices(g.from().span(), f.from().span());
    REQUIRE(pairs.size() == gf.components().size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      CHECK(gf.component(i).matrix() == kron(g.component(pairs[i].first).matrix(), f.component(pairs[i].second).matrix()));
    // whiskering by an identity only relabels
    VCell2 w = hcomp2(bk, identity2(bk, b), f);
    for (std::size_t i = 0; i < w.components().size(); ++i) {
      auto [d, c] = pullback_indices(b.span(), f.from().span())[i];
      CHECK(w.component(i) == tensor_mor(VMorphism::identity(b.label(d)), f.component(c)));
    }
    CHECK(eq2(bk, hcomp2(bk, identity2(bk, b), identity2(bk, a)), identity2(bk, hcomp1(bk, b, a))));
  }
}

TEST_CASE("monoidal product of cells") {
  auto bk = backend(2);
  VObject d2 = VObject::ungraded(2, "a"), d3 = VObject::ungraded(3, "b");
  VCell1 a = group_cell(bk, {d2}), b = group_cell(bk, {d3});
  VCell1 ab = tensor1(bk, a, b);
  REQUIRE(ab.apex().size() == 1);
  CHECK(ab.label(0) == tensor_obj(d2, d3));
  VCell1 unit = identity1(bk, unit_cell0(bk));
  VCell1 au = tensor1(bk, a, unit);
  CHECK(au.label(0) == d2);
  CHECK(au.apex()[0] == Atom::pair(a.apex()[0], Atom()));
  CHECK(eq2(bk, tensor2(bk, identity2(bk, a), identity2(bk, b)), identity2(bk, ab)));
}

TEST_CASE("eq2 reports the first difference") {
  auto bk = backend(1);
  VObject d2 = VObject::ungraded(2);
  VCell1 a = group_cell(bk, {d2, d2});
  VCell2 u = identity2(bk, a);
  CHECK(eq2(bk, u, u));
  std::vector<VMorphism> comps = u.components();
  VMorphism::Matrix m = comps[1].matrix();
  m(0, 1) = 5;
  comps[1] = VMorphism(d2, d2, m);
  VCell2 v(bk, a, a, u.map(), comps);
  auto e = eq2(bk, u, v);
  CHECK_FALSE(e);
  CHECK(e.witness.find("at 1") != std::string::npos);
  CHECK(e.witness.find("entry (0,1)") != std::string::npos);
}

TEST_CASE("bicategory laws on randomized cells") {
  for (long q : {1L, -1L, 2L}) {
    auto bk = backend(q);
    CellGen gen(static_cast<unsigned>(100 + q), 3, 2);
    for (int trial = 0; trial < 25; ++trial)
      for (const auto& r : coherence_case(bk, gen)) CHECK_MESSAGE(r.holds, r.law << ": " << r.witness);
  }
}

TEST_CASE("path rewriting agrees with direct whiskering") {
  auto bk = backend(2);
  CellGen gen(77, 2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    VCell0 x = gen.carrier(1, 2);
    VCell1 a = gen.cell1(bk, x, x), b = gen.cell1(bk, x, x), c = gen.cell1(bk, x, x);
    VCell2 f = gen.cell2_into(bk, b);
    Path<VectBackend> p = make_path(bk, std::vector<VCell1>{c, f.from(), a});
    Path<VectBackend> repl = make_path(bk, std::vector<VCell1>{b});
    VCell2 r = rewrite(bk, p, 1, 1, f, repl);
    VCell2 direct = hcomp2(bk, identity2(bk, c), hcomp2(bk, f, identity2(bk, a)));
    CHECK(eq2(bk, r, direct));
    // rewriting a window of length two re-brackets through the associator
    VCell1 ba = hcomp1(bk, b, a);
    VCell2 id_ba = identity2(bk, ba);
    Path<VectBackend> q = make_path(bk, std::vector<VCell1>{c, b, a});
    VCell2 r2 = rewrite(bk, q, 1, 2, id_ba, make_path(bk, std::vector<VCell1>{ba}));
    CHECK(eq2(bk, r2, identity2(bk, eval(bk, q))));
    VCell2 r3 = rewrite(bk, q, 0, 2, identity2(bk, hcomp1(bk, c, b)), make_path(bk, std::vector<VCell1>{hcomp1(bk, c, b)}));
    CHECK(eq2(bk, r3, inverse2(bk, associator2(bk, c, b, a))));
  }
}

TEST_CASE("Span|F along V -> Cat") {
  BraidParam q(Rational(2));
  VectBackend bk{q};
  CatBackend ck;
  VObject d2 = VObject::ungraded(2, "p");
  VObject g({{Atom::of("u"), 0}, {Atom::of("v"), 1}});
  VectImage im = vect_as_lazy_category(q, {VObject::unit(), d2, g});
  auto F = vect_to_cat(im);
  VCell1 a = group_cell(bk, {d2});
  Cell1<CatBackend> fa = apply_span_F(ck, F, a);
  CHECK(fa.apex() == a.apex());
  CHECK(functor_equal(fa.label(0), tensor_left(im.v, d2)));
  for (const auto& x : im.v->objects()) CHECK(fa.label(0).on_object(x).as_object().dim() == 2 * x.as_object().dim());
  VCell1 b = group_cell(bk, {g, d2});
  Cell2<CatBackend> cmp = span_comparison(bk, ck, F, b, a);
  CHECK(invert2(ck, cmp));
  CHECK(invert2(ck, span_unit(bk, ck, F, singleton())));
  VMorphism sw = braiding(g, g, q);
  CHECK(check_vect_to_cat(im, {VObject::unit(), d2, g}, {VMorphism::identity(g), sw, sw * sw}).passed());

  // the identity lax functor on V acts as the identity
  LaxFunctor<VectBackend, VectBackend> id;
  id.on0 = [](const VectBackend::Obj0& x) { return x; };
  id.on1 = [](const VObject& x) { return x; };
  id.on2 = [](const VMorphism& f) { return f; };
  id.comparison = [](const VObject& b2, const VObject& a2) { return VMorphism::identity(tensor_obj(b2, a2)); };
  id.unit = [](const VectBackend::Obj0&) { return VMorphism::identity(VObject::unit()); };
  CellGen gen(3);
  VCell0 x = gen.carrier();
  VCell2 f = gen.cell2_into(bk, gen.cell1(bk, x, x));
  CHECK(eq2(bk, apply_span_F(bk, id, f), f));
}
