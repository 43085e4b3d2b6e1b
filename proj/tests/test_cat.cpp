#include <random>

#include "doctest.h"
#include "spanv/cat.hpp"

using namespace spanv;

namespace {

CategoryTables idempotent_monoid_tables() {
  CategoryTables t;
  t.objects = FinSet({Atom::of("*")});
  t.morphisms = FinSet({Atom::of("1"), Atom::of("z")});
  t.src = {0, 0};
  t.tgt = {0, 0};
  t.identities = {0};
  t.composition = {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
  return t;
}

// 0 -a-> 1
FinCategoryPtr arrow_category() {
  CategoryTables t;
  t.objects = FinSet::range(2);
  t.morphisms = FinSet({Atom::of("id0"), Atom::of("id1"), Atom::of("a")});
  t.src = {0, 1, 0};
  t.tgt = {0, 1, 1};
  t.identities = {0, 1};
  t.composition = {{{0, 0}, 0}, {{1, 1}, 1}, {{2, 0}, 2}, {{1, 2}, 2}};
  return FinCategory::make(t, "2");
}

// Every functor between two finite categories, by brute force over object and morphism maps.
std::vector<FunctorData> all_functors(const FinCategoryPtr& c, const FinCategoryPtr& d) {
  std::vector<FunctorData> out;
  const std::size_t no = c->num_objects(), nm = c->num_morphisms();
  std::vector<std::size_t> om(no, 0), mm(nm, 0);
  auto bump = [](std::vector<std::size_t>& v, std::size_t base) {
    for (auto& x : v) {
      if (++x < base) return true;
      x = 0;
    }
    return false;
  };
  do {
    std::fill(mm.begin(), mm.end(), 0);
    do {
      FunctorData f{c, d, FinFn(c->object_set(), d->object_set(), om), FinFn(c->morphism_set(), d->morphism_set(), mm)};
      if (check_functor_data(f).passed()) out.push_back(f);
    } while (bump(mm, d->num_morphisms()));
  } while (bump(om, d->num_objects()));
  return out;
}

std::vector<NatTransData> all_nat_trans(const FunctorData& f, const FunctorData& g) {
  std::vector<NatTransData> out;
  const std::size_t no = f.dom->num_objects();
  std::vector<std::size_t> comps(no, 0);
  do {
    NatTransData n{f, g, comps};
    if (check_nat_trans_data(n).passed()) out.push_back(n);
    std::size_t i = 0;
    for (; i < no; ++i) {
      if (++comps[i] < f.cod->num_morphisms()) break;
      comps[i] = 0;
    }
    if (i == no) break;
  } while (true);
  return out;
}

}  // namespace

TEST_CASE("category table checks") {
  CHECK(check_category(idempotent_monoid_tables()).passed());
  CategoryTables broken = idempotent_monoid_tables();
  broken.composition.erase({1, 1});
  Report r = check_category(broken);
  REQUIRE_FALSE(r.passed());
  CHECK(r.witnesses().front().where == "(z,z)");
  CHECK_THROWS_AS(FinCategory::make(broken), CategoryError);

  FinCategoryPtr ind = indiscrete_category(FinSet::range(2));
  CHECK(ind->num_morphisms() == 4);
  // full associativity enumeration: n^4 composable triples for n objects
  CHECK(check_category(ind->tables()).checked() == 16);
}

TEST_CASE("groupoid detection") {
  CHECK(is_groupoid(*cyclic_group_category(2)));
  auto m = FinCategory::make(idempotent_monoid_tables());
  Verdict v = is_groupoid(*m);
  CHECK_FALSE(v);
  CHECK(v.witness.find("z") != std::string::npos);
  auto ind = indiscrete_category(FinSet::range(2));
  CHECK(is_groupoid(*ind));
  for (std::size_t f = 0; f < ind->num_morphisms(); ++f) {
    auto g = ind->inverse_of(f);
    REQUIRE(g);
    CHECK(ind->src(*g) == ind->tgt(f));
  }
  CHECK_FALSE(is_groupoid(*arrow_category()));
}

TEST_CASE("natural isomorphism detection") {
  auto two = arrow_category();
  auto functors = all_functors(two, two);
  // brute-force count of endofunctors of 2: the three monotone maps {0,1} -> {0,1}
  CHECK(functors.size() == 3);
  FunctorData id{two, two, FinFn::identity(two->object_set()), FinFn::identity(two->morphism_set())};
  CHECK(nat_is_iso(make_nat_trans(NatTransData{id, id, {0, 1}})));
  // constant-at-0 ⇒ identity has component a at object 1, which is not invertible
  FunctorData c0{two, two, FinFn(two->object_set(), two->object_set(), {0, 0}),
                 FinFn(two->morphism_set(), two->morphism_set(), {0, 0, 0})};
  Verdict v = nat_is_iso(make_nat_trans(NatTransData{c0, id, {0, 2}}));
  CHECK_FALSE(v);
  CHECK(v.witness.find("at 1") != std::string::npos);
  CHECK_THROWS_AS(make_nat_trans(NatTransData{c0, id, {0, 0}}), CategoryError);

  // translation on the indiscrete category on Z2, compared with the identity
  auto ind = indiscrete_category(FinSet::range(2));
  auto shift = [](std::size_t m) { return ((m / 2 + 1) % 2) * 2 + (m % 2 + 1) % 2; };
  FunctorData idI{ind, ind, FinFn::identity(ind->object_set()), FinFn::identity(ind->morphism_set())};
  FunctorData T{ind, ind, FinFn(ind->object_set(), ind->object_set(), {1, 0}),
                FinFn(ind->morphism_set(), ind->morphism_set(), {shift(0), shift(1), shift(2), shift(3)})};
  // component at x is (x+1, x)
  NatTransData cmp{idI, T, {2, 1}};
  REQUIRE(check_nat_trans_data(cmp).passed());
  NatTrans n = make_nat_trans(cmp);
  CHECK(nat_is_iso(n));
  auto inv = nat_inverse(n);
  REQUIRE(inv);
  for (const auto& x : ind->objects())
    CHECK(ind->compose(inv->at(x), n.at(x)) == ind->identity(x));
}

TEST_CASE("interchange of natural transformations on finite instances") {
  auto two = arrow_category();
  auto fs = all_functors(two, two);
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<std::vector<std::vector<NatTransData>>> nats(fs.size(), std::vector<std::vector<NatTransData>>(fs.size()));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) nats[i][j] = all_nat_trans(fs[i], fs[j]);
  std::mt19937 rng(9);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 100; ++trial) {
    std::size_t a = pick(3), b = pick(3), c = pick(3), x = pick(3), y = pick(3), z = pick(3);
    if (nats[a][b].empty() || nats[b][c].empty() || nats[x][y].empty() || nats[y][z].empty()) continue;
    NatTrans alpha = make_nat_trans(nats[a][b][pick(nats[a][b].size())]);
    NatTrans alpha2 = make_nat_trans(nats[b][c][pick(nats[b][c].size())]);
    NatTrans beta = make_nat_trans(nats[x][y][pick(nats[x][y].size())]);
    NatTrans beta2 = make_nat_trans(nats[y][z][pick(nats[y][z].size())]);
    NatTrans lhs = vcomp(hcomp(beta2, alpha2), hcomp(beta, alpha));
    NatTrans rhs = hcomp(vcomp(beta2, beta), vcomp(alpha2, alpha));
    CHECK_FALSE(nat_difference(lhs, rhs));
    CHECK(check_naturality(lhs).passed());
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("lazily evaluated V") {
  VObject k = VObject::unit();
  VObject d2 = VObject::ungraded(2, "p");
  VObject g = VObject({{Atom::of("u"), 0}, {Atom::of("v"), 1}});
  SUBCASE("K⊗- is the identity on probes") {
    VectImage im = vect_as_lazy_category(BraidParam(Rational(2)), {k, d2, g});
    Functor kf = tensor_left(im.v, k);
    CHECK(functor_equal(kf, Functor::identity(im.v)));
  }
  SUBCASE("dim-2 tensor doubles dimensions") {
    VectImage im = vect_as_lazy_category(BraidParam(Rational(1)), {d2, g});
    Functor f = tensor_left(im.v, d2);
    for (const auto& x : im.v->objects()) CHECK(f.on_object(x).as_object().dim() == 2 * x.as_object().dim());
    CHECK(check_functor(f).passed());
  }
  SUBCASE("product compatibility is the braiding-built 1⊗c⊗1 and invertible") {
    BraidParam q(Rational(2));
    VectImage im = vect_as_lazy_category(q, {k, d2, g});
    NatTrans pc = im.product_compatibility(g, g);
    NatTrans pci = im.product_compatibility_inverse(g, g);
    CHECK(nat_is_iso(pc));
    CHECK(check_naturality(pc).passed());
    Handle xy = Handle::pair(Handle(g), Handle(g));
    VMorphism comp = pc.at(xy).as_morphism();
    // oracle: basis (p_i, x_j, r_k, y_l) -> q^(-deg r_k deg x_j) (p_i, r_k, x_j, y_l)
    const std::size_t n = 2;
    VMorphism::Matrix expected = VMorphism::Matrix::Zero(16, 16);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t kk = 0; kk < n; ++kk)
          for (std::size_t l = 0; l < n; ++l)
            expected(((i * n + kk) * n + j) * n + l, ((i * n + j) * n + kk) * n + l) =
                pow(q.q(), -g[kk].grade * g[j].grade);
    CHECK(comp.matrix() == expected);
    CHECK((pci.at(xy).as_morphism() * comp) == VMorphism::identity(comp.dom()));
    CHECK(im.unit.on_object(Handle::index(0)).as_object() == k);
    CHECK(im.unit_iso == VMorphism::identity(tensor_obj(k, k)));
  }
  SUBCASE("probe sample satisfies the category laws") {
    VMorphism f(d2, d2, (VMorphism::Matrix(2, 2) << 1, 2, 3, 4).finished());
    VMorphism h(d2, d2, (VMorphism::Matrix(2, 2) << 0, 1, 1, 0).finished());
    Category v = vect_category(BraidParam(Rational(-1)), {d2}, {f, h});
    Report r = check_category_sample(v);
    CHECK(r.passed());
    CHECK(r.checked() == 27);
  }
  CHECK_THROWS(vect_as_lazy_category(BraidParam(Rational(1)), {}));
}
