#include <random>

#include "doctest.h"
#include "spanv/finset.hpp"

using namespace spanv;

namespace {

FinSet named(std::initializer_list<const char*> names) {
  std::vector<Atom> v;
  for (const char* n : names) v.push_back(Atom::of(n));
  return FinSet(v);
}

FinFn random_fn(std::mt19937& rng, const FinSet& dom, const FinSet& cod) {
  std::vector<std::size_t> v(dom.size());
  for (auto& x : v) x = std::uniform_int_distribution<std::size_t>(0, cod.size() - 1)(rng);
  return FinFn(dom, cod, v);
}

Span random_span(std::mt19937& rng, const FinSet& src, const FinSet& tgt, std::size_t max_apex, const char* tag) {
  std::size_t n = src.empty() || tgt.empty() ? 0 : std::uniform_int_distribution<std::size_t>(0, max_apex)(rng);
  std::vector<Atom> apex;
  for (std::size_t i = 0; i < n; ++i) apex.push_back(Atom::of(std::string(tag) + std::to_string(i)));
  FinSet a(apex);
  return Span(random_fn(rng, a, tgt), random_fn(rng, a, src));
}

}  // namespace

TEST_CASE("atoms are interned") {
  CHECK(Atom::of("x") == Atom::of("x"));
  CHECK(Atom::of("1") != Atom::of(1));
  CHECK(Atom::pair(Atom::of("a"), Atom::of(2)) == Atom::pair(Atom::of("a"), Atom::of(2)));
  CHECK(Atom::pair(Atom::of("a"), Atom::of(2)).str() == "(a,2)");
  CHECK(flatten_concat(Atom(), Atom::of("g")) == Atom::of("g"));
  CHECK(flatten_concat(flatten_concat(Atom::of("a"), Atom::of("b")), Atom::of("c")) ==
        flatten_concat(Atom::of("a"), flatten_concat(Atom::of("b"), Atom::of("c"))));
}

TEST_CASE("finite sets reject duplicates") {
  CHECK_THROWS_AS(FinSet({Atom::of("a"), Atom::of("a")}), std::invalid_argument);
  CHECK_THROWS(FinFn(named({"a"}), named({"b"}), {1}));
}

TEST_CASE("identity spans compose to the identity span up to relabeling") {
  FinSet x = named({"0", "1"});
  Span id = Span::identity(x);
  Span c = compose_spans(id, id);
  CHECK(c.apex().size() == 2);
  CHECK(c.apex()[0] == Atom::pair(Atom::of("0"), Atom::of("0")));
  CHECK(left_unitor_iso(id).map().is_bijective());
}

TEST_CASE("pullback of a two-leg span with a single-element span") {
  FinSet pt = named({"*"});
  FinSet x = named({"0", "1"});
  FinSet bap = named({"p", "q"});
  Span b(FinFn(bap, pt, {0, 0}), FinFn(bap, x, {0, 1}));
  FinSet aap = named({"m"});
  Span a(FinFn(aap, x, {0}), FinFn(aap, pt, {0}));
  Span ba = compose_spans(b, a);
  REQUIRE(ba.apex().size() == 1);
  CHECK(ba.apex()[0] == Atom::pair(Atom::of("p"), Atom::of("m")));
  CHECK_THROWS_AS(compose_spans(a, a), BoundaryError);
}

TEST_CASE("complete span composed with itself has |X|^3 elements") {
  FinSet x = named({"0", "1"});
  Span complete(FinFn::first_projection(x, x), FinFn::second_projection(x, x));
  std::size_t brute = 0;
  for (std::size_t d = 0; d < 4; ++d)
    for (std::size_t c = 0; c < 4; ++c) brute += complete.right()(d) == complete.left()(c);
  CHECK(brute == 8);
  CHECK(compose_spans(complete, complete).apex().size() == brute);
}

TEST_CASE("horizontal composition of span morphisms acts pairwise") {
  FinSet x = named({"0", "1"});
  FinSet ap = named({"u", "v"});
  FinSet pt = named({"*"});
  Span s(FinFn(ap, x, {0, 1}), FinFn(ap, x, {1, 0}));
  // automorphism of the span swapping u,v is impossible (legs differ); use maps onto a coarser span
  Span t(FinFn(x, x, {0, 1}), FinFn(x, x, {1, 0}));
  SpanMorphism f(s, t, FinFn(ap, x, {0, 1}));
  SpanMorphism h = compose_span_morphisms_h(f, f);
  for (Atom e : h.from().apex().elements()) {
    Atom expected = Atom::pair(f.map()(e.first()), f.map()(e.second()));
    CHECK(h.map()(e) == expected);
  }
  CHECK(compose_span_morphisms_h(SpanMorphism::identity(s), SpanMorphism::identity(s)) ==
        SpanMorphism::identity(compose_spans(s, s)));
  Span to_point(FinFn(pt, x, {0}), FinFn(pt, x, {0}));
  Span loop(FinFn(ap, x, {0, 0}), FinFn(ap, x, {0, 0}));
  SpanMorphism constant(loop, to_point, FinFn(ap, pt, {0, 0}));
  SpanMorphism cc = compose_span_morphisms_h(constant, constant);
  for (std::size_t i = 0; i < cc.map().domain().size(); ++i) CHECK(cc.map()(i) == 0);
}

TEST_CASE("cartesian product") {
  FinSet x = named({"0", "1"});
  FinSet ap = named({"u", "v"});
  Span a(FinFn(ap, x, {0, 1}), FinFn(ap, x, {1, 1}));
  Span unit = Span::identity(FinSet::singleton());
  Span au = cartesian_product(a, unit);
  CHECK(au.apex().size() == a.apex().size());
  CHECK(au.apex()[1] == Atom::pair(Atom::of("v"), Atom()));
  CHECK(cartesian_product(a, a).apex().size() == 4);
  Span empty(FinFn(FinSet(), x, {}), FinFn(FinSet(), x, {}));
  CHECK(cartesian_product(empty, a).apex().empty());
  CHECK(cartesian_product(a, empty).apex().empty());
}

TEST_CASE("associator on brute-force enumerated bracketings") {
  std::mt19937 rng(7);
  FinSet x = named({"0", "1"});
  for (int trial = 0; trial < 200; ++trial) {
    Span a = random_span(rng, x, x, 4, "a");
    Span b = random_span(rng, x, x, 4, "b");
    Span c = random_span(rng, x, x, 4, "c");
    SpanMorphism alpha = associator_iso(c, b, a);
    std::size_t brute = 0;
    for (std::size_t i = 0; i < c.apex().size(); ++i)
      for (std::size_t j = 0; j < b.apex().size(); ++j)
        for (std::size_t k = 0; k < a.apex().size(); ++k)
          brute += c.right()(i) == b.left()(j) && b.right()(j) == a.left()(k);
    CHECK(alpha.from().apex().size() == brute);
    CHECK(alpha.map().is_bijective());
    auto inv = invert(alpha);
    REQUIRE(inv);
    CHECK(compose_span_morphisms_v(*inv, alpha) == SpanMorphism::identity(alpha.from()));
    CHECK(left_unitor_iso(a).map().is_bijective());
    CHECK(right_unitor_iso(a).map().is_bijective());
  }
  Span e(FinFn(FinSet(), x, {}), FinFn(FinSet(), x, {}));
  CHECK(associator_iso(e, Span::identity(x), Span::identity(x)).from().apex().empty());
}

TEST_CASE("associator is natural in span morphisms") {
  std::mt19937 rng(11);
  FinSet x = named({"0", "1"});
  for (int trial = 0; trial < 100; ++trial) {
    Span a = random_span(rng, x, x, 3, "a");
    Span b = random_span(rng, x, x, 3, "b");
    Span c = random_span(rng, x, x, 3, "c");
    // collapse each span to its image under (left,right), which is a span morphism
    auto collapse = [&](const Span& s) {
      Span image(FinFn::first_projection(x, x), FinFn::second_projection(x, x));
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < s.apex().size(); ++i) v.push_back(s.left()(i) * 2 + s.right()(i));
      return SpanMorphism(s, image, FinFn(s.apex(), image.apex(), v));
    };
    SpanMorphism f = collapse(a), g = collapse(b), h = collapse(c);
    SpanMorphism lhs = compose_span_morphisms_v(associator_iso(h.to(), g.to(), f.to()),
                                                compose_span_morphisms_h(compose_span_morphisms_h(h, g), f));
    SpanMorphism rhs = compose_span_morphisms_v(compose_span_morphisms_h(h, compose_span_morphisms_h(g, f)),
                                                associator_iso(c, b, a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cartesian product is functorial") {
  std::mt19937 rng(5);
  FinSet x = named({"0", "1"});
  Span image(FinFn::first_projection(x, x), FinFn::second_projection(x, x));
  for (int trial = 0; trial < 50; ++trial) {
    Span a = random_span(rng, x, x, 3, "a");
    Span b = random_span(rng, x, x, 3, "b");
    auto collapse = [&](const Span& s) {
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < s.apex().size(); ++i) v.push_back(s.left()(i) * 2 + s.right()(i));
      return SpanMorphism(s, image, FinFn(s.apex(), image.apex(), v));
    };
    SpanMorphism f1 = SpanMorphism::identity(a), g1 = SpanMorphism::identity(b);
    SpanMorphism f2 = collapse(a), g2 = collapse(b);
    CHECK(cartesian_product(compose_span_morphisms_v(f2, f1), compose_span_morphisms_v(g2, g1)) ==
          compose_span_morphisms_v(cartesian_product(f2, g2), cartesian_product(f1, g1)));
  }
}

TEST_CASE("right adjoints exist exactly for spans with bijective right leg") {
  FinSet x = named({"0", "1", "2"});
  SUBCASE("identity span") {
    auto r = right_adjoint_of(Span::identity(x));
    REQUIRE(r.data);
    CHECK(r.data->adjoint == Span::identity(x));
  }
  SUBCASE("non-surjective right leg") {
    // apex = off-diagonal pairs of {0,1} mapped to src {0,1,2} by first coordinate
    FinSet ap = named({"01", "10"});
    Span s(FinFn(ap, x, {1, 0}), FinFn(ap, x, {0, 1}));
    auto r = right_adjoint_of(s);
    CHECK_FALSE(r.data);
    CHECK(r.witness.find("2") != std::string::npos);
  }
  SUBCASE("graph of a function satisfies both triangle identities") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      FinFn h = random_fn(rng, x, x);
      Span graph(h, FinFn::identity(x));
      auto r = right_adjoint_of(graph);
      REQUIRE(r.data);
      CHECK(r.data->adjoint.left() == FinFn::identity(x));
      CHECK(r.data->adjoint.right() == h);
      const Span& a = graph;
      const Span& adj = r.data->adjoint;
      // (ε∘a)·α·(a∘η) = λ⁻¹... written with unitors: λ_a · (ε∘1) · α⁻¹ · (1∘η) · ρ_a⁻¹ = 1_a
      SpanMorphism a_eta = compose_span_morphisms_h(SpanMorphism::identity(a), r.data->unit);
      SpanMorphism eps_a = compose_span_morphisms_h(r.data->counit, SpanMorphism::identity(a));
      SpanMorphism alpha_inv = *invert(associator_iso(a, adj, a));
      SpanMorphism tri1 = compose_span_morphisms_v(
          left_unitor_iso(a),
          compose_span_morphisms_v(eps_a, compose_span_morphisms_v(alpha_inv,
                                                                   compose_span_morphisms_v(a_eta, *invert(right_unitor_iso(a))))));
      CHECK(tri1 == SpanMorphism::identity(a));
      SpanMorphism eta_adj = compose_span_morphisms_h(r.data->unit, SpanMorphism::identity(adj));
      SpanMorphism adj_eps = compose_span_morphisms_h(SpanMorphism::identity(adj), r.data->counit);
      SpanMorphism tri2 = compose_span_morphisms_v(
          right_unitor_iso(adj),
          compose_span_morphisms_v(adj_eps, compose_span_morphisms_v(associator_iso(adj, a, adj),
                                                                     compose_span_morphisms_v(eta_adj, *invert(left_unitor_iso(adj))))));
      CHECK(tri2 == SpanMorphism::identity(adj));
    }
  }
}
