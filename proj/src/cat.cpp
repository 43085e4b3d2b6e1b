#include "spanv/cat.hpp"

#include <set>

namespace spanv {

std::size_t Handle::as_index() const {
  if (!is_index()) throw std::logic_error("handle is not a table index: " + str());
  return std::get<1>(v_);
}

const VObject& Handle::as_object() const {
  if (!is_object()) throw std::logic_error("handle is not a vector space: " + str());
  return std::get<2>(v_);
}

const VMorphism& Handle::as_morphism() const {
  if (!is_morphism()) throw std::logic_error("handle is not a linear map: " + str());
  return std::get<3>(v_);
}

const Handle& Handle::first() const {
  if (!is_pair()) throw std::logic_error("handle is not a pair: " + str());
  return std::get<4>(v_)->first;
}

const Handle& Handle::second() const {
  if (!is_pair()) throw std::logic_error("handle is not a pair: " + str());
  return std::get<4>(v_)->second;
}

std::string Handle::str() const {
  switch (v_.index()) {
    case 0:
      return "<none>";
    case 1:
      return "#" + std::to_string(std::get<1>(v_));
    case 2:
      return std::get<2>(v_).str();
    case 3:
      return std::get<3>(v_).str();
    default:
      return "(" + first().str() + "," + second().str() + ")";
  }
}

bool operator==(const Handle& a, const Handle& b) {
  if (a.v_.index() != b.v_.index()) return false;
  switch (a.v_.index()) {
    case 0:
      return true;
    case 1:
      return std::get<1>(a.v_) == std::get<1>(b.v_);
    case 2:
      return std::get<2>(a.v_) == std::get<2>(b.v_);
    case 3:
      return std::get<3>(a.v_) == std::get<3>(b.v_);
    default:
      return a.first() == b.first() && a.second() == b.second();
  }
}

bool operator<(const Handle& a, const Handle& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
  switch (a.v_.index()) {
    case 0:
      return false;
    case 1:
      return std::get<1>(a.v_) < std::get<1>(b.v_);
    case 4:
      if (a.first() == b.first()) return a.second() < b.second();
      return a.first() < b.first();
    default:
      throw std::logic_error("handles of vector spaces are not ordered");
  }
}

std::vector<Handle> CategoryImpl::hom(const Handle& x, const Handle& y) const {
  std::vector<Handle> out;
  for (const Handle& m : morphisms())
    if (dom(m) == x && cod(m) == y) out.push_back(m);
  return out;
}

bool same_category(const Category& a, const Category& b) { return a == b || a->same_as(*b) || b->same_as(*a); }

Report check_category(const CategoryTables& t) {
  Report r("category");
  const std::size_t no = t.objects.size(), nm = t.morphisms.size();
  auto mname = [&](std::size_t f) { return f < nm ? t.morphisms[f].str() : "#" + std::to_string(f); };
  if (t.src.size() != nm || t.tgt.size() != nm) {
    r.fail("tables", "source/target tables must list every morphism");
    return r;
  }
  if (t.identities.size() != no) {
    r.fail("tables", "identity table must list every object");
    return r;
  }
  for (std::size_t f = 0; f < nm; ++f)
    if (t.src[f] >= no || t.tgt[f] >= no) r.fail(mname(f), "source or target is not an object");
  for (std::size_t x = 0; x < no; ++x) {
    std::size_t i = t.identities[x];
    if (i >= nm || t.src[i] != x || t.tgt[i] != x)
      r.fail(t.objects[x].str(), "identity is not an endomorphism of the object");
  }
  if (!r.passed()) return r;
  for (const auto& [key, v] : t.composition) {
    auto [g, f] = key;
    if (g >= nm || f >= nm || v >= nm) {
      r.fail("(" + mname(g) + "," + mname(f) + ")", "composition table entry out of range");
      continue;
    }
    if (t.src[g] != t.tgt[f]) r.fail("(" + mname(g) + "," + mname(f) + ")", "composite assigned to a non-composable pair");
    else if (t.src[v] != t.src[f] || t.tgt[v] != t.tgt[g])
      r.fail("(" + mname(g) + "," + mname(f) + ")", "composite " + mname(v) + " has the wrong boundary");
  }
  if (!r.passed()) return r;
  auto comp = [&](std::size_t g, std::size_t f) -> std::optional<std::size_t> {
    auto it = t.composition.find({g, f});
    if (it == t.composition.end()) return std::nullopt;
    return it->second;
  };
  bool total = true;
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f)
      if (t.src[g] == t.tgt[f] && !comp(g, f)) {
        r.fail("(" + mname(g) + "," + mname(f) + ")", "composite unassigned");
        total = false;
      }
  if (!total) return r;
  for (std::size_t f = 0; f < nm; ++f) {
    if (*comp(t.identities[t.tgt[f]], f) != f) r.fail(mname(f), "left identity law fails");
    if (*comp(f, t.identities[t.src[f]]) != f) r.fail(mname(f), "right identity law fails");
  }
  for (std::size_t h = 0; h < nm; ++h)
    for (std::size_t g = 0; g < nm; ++g) {
      if (t.src[h] != t.tgt[g]) continue;
      for (std::size_t f = 0; f < nm; ++f) {
        if (t.src[g] != t.tgt[f]) continue;
        r.count();
        if (*comp(*comp(h, g), f) != *comp(h, *comp(g, f)))
          r.fail("(" + mname(h) + "," + mname(g) + "," + mname(f) + ")", "associativity fails");
      }
    }
  return r;
}

CategoryError::CategoryError(Report r)
    : std::invalid_argument(r.summary()), report_(std::move(r)) {}

FinCategory::FinCategory(CategoryTables t, std::string name) : t_(std::move(t)), name_(std::move(name)) {
  Report r = check_category(t_);
  if (!r.passed()) throw CategoryError(std::move(r));
}

std::size_t FinCategory::comp(std::size_t g, std::size_t f) const {
  auto it = t_.composition.find({g, f});
  if (it == t_.composition.end())
    throw std::invalid_argument("morphisms " + t_.morphisms[g].str() + " and " + t_.morphisms[f].str() +
                                " are not composable in " + name_);
  return it->second;
}

std::optional<std::size_t> FinCategory::inverse_of(std::size_t f) const {
  for (std::size_t g = 0; g < num_morphisms(); ++g)
    if (src(g) == tgt(f) && tgt(g) == src(f) && comp(g, f) == id(src(f)) && comp(f, g) == id(tgt(f))) return g;
  return std::nullopt;
}

std::optional<Handle> FinCategory::inverse(const Handle& m) const {
  if (auto g = inverse_of(m.as_index())) return Handle::index(*g);
  return std::nullopt;
}

std::vector<Handle> FinCategory::objects() const {
  std::vector<Handle> out;
  for (std::size_t i = 0; i < num_objects(); ++i) out.push_back(Handle::index(i));
  return out;
}

std::vector<Handle> FinCategory::morphisms() const {
  std::vector<Handle> out;
  for (std::size_t i = 0; i < num_morphisms(); ++i) out.push_back(Handle::index(i));
  return out;
}

std::vector<Handle> FinCategory::hom(const Handle& x, const Handle& y) const {
  std::vector<Handle> out;
  for (std::size_t i = 0; i < num_morphisms(); ++i)
    if (src(i) == x.as_index() && tgt(i) == y.as_index()) out.push_back(Handle::index(i));
  return out;
}

bool FinCategory::same_as(const CategoryImpl& other) const {
  auto* o = dynamic_cast<const FinCategory*>(&other);
  if (!o) return false;
  if (o == this) return true;
  return t_.objects == o->t_.objects && t_.morphisms == o->t_.morphisms && t_.src == o->t_.src &&
         t_.tgt == o->t_.tgt && t_.identities == o->t_.identities && t_.composition == o->t_.composition;
}

std::string FinCategory::show_object(const Handle& h) const {
  if (h.is_index() && h.as_index() < num_objects()) return t_.objects[h.as_index()].str();
  return h.str();
}

std::string FinCategory::show_morphism(const Handle& h) const {
  if (h.is_index() && h.as_index() < num_morphisms()) return t_.morphisms[h.as_index()].str();
  return h.str();
}

FinCategoryPtr monoid_category(const FinSet& elements, const std::vector<std::vector<std::size_t>>& table,
                               std::size_t unit, std::string name) {
  CategoryTables t;
  t.objects = FinSet({Atom::of("*")});
  t.morphisms = elements;
  t.src.assign(elements.size(), 0);
  t.tgt.assign(elements.size(), 0);
  t.identities = {unit};
  for (std::size_t g = 0; g < table.size(); ++g)
    for (std::size_t f = 0; f < table[g].size(); ++f) t.composition[{g, f}] = table[g][f];
  return FinCategory::make(std::move(t), std::move(name));
}

FinCategoryPtr cyclic_group_category(std::size_t n, std::string name) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) table[g][f] = (g + f) % n;
  return monoid_category(FinSet::range(n), table, 0, std::move(name));
}

FinCategoryPtr indiscrete_category(const FinSet& objects, std::string name) {
  CategoryTables t;
  t.objects = objects;
  const std::size_t n = objects.size();
  std::vector<Atom> mors;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      mors.push_back(Atom::pair(objects[x], objects[y]));
      t.tgt.push_back(x);
      t.src.push_back(y);
    }
  t.morphisms = FinSet(mors);
  for (std::size_t x = 0; x < n; ++x) t.identities.push_back(x * n + x);
  // (x,y)∘(y,z) = (x,z)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) t.composition[{x * n + y, y * n + z}] = x * n + z;
  return FinCategory::make(std::move(t), std::move(name));
}

FinCategoryPtr discrete_category(const FinSet& objects, std::string name) {
  CategoryTables t;
  t.objects = objects;
  t.morphisms = objects;
  for (std::size_t x = 0; x < objects.size(); ++x) {
    t.src.push_back(x);
    t.tgt.push_back(x);
    t.identities.push_back(x);
    t.composition[{x, x}] = x;
  }
  return FinCategory::make(std::move(t), std::move(name));
}

FinCategoryPtr terminal_category() {
  static FinCategoryPtr one = discrete_category(FinSet::singleton(), "1");
  return one;
}

Verdict is_groupoid(const FinCategory& c) {
  for (std::size_t f = 0; f < c.num_morphisms(); ++f)
    if (!c.inverse_of(f)) return Verdict::fail("morphism " + c.morphism_set()[f].str() + " has no inverse");
  return Verdict::pass();
}

namespace {

class ProductCategory final : public CategoryImpl {
 public:
  ProductCategory(Category a, Category b) : a_(std::move(a)), b_(std::move(b)) {}
  std::string name() const override { return a_->name() + "x" + b_->name(); }
  Handle dom(const Handle& m) const override { return Handle::pair(a_->dom(m.first()), b_->dom(m.second())); }
  Handle cod(const Handle& m) const override { return Handle::pair(a_->cod(m.first()), b_->cod(m.second())); }
  Handle identity(const Handle& x) const override {
    return Handle::pair(a_->identity(x.first()), b_->identity(x.second()));
  }
  Handle compose(const Handle& g, const Handle& f) const override {
    return Handle::pair(a_->compose(g.first(), f.first()), b_->compose(g.second(), f.second()));
  }
  std::optional<Handle> inverse(const Handle& m) const override {
    auto x = a_->inverse(m.first());
    auto y = b_->inverse(m.second());
    if (!x || !y) return std::nullopt;
    return Handle::pair(*x, *y);
  }
  bool finite() const override { return a_->finite() && b_->finite(); }
  std::vector<Handle> objects() const override { return pairs(a_->objects(), b_->objects()); }
  std::vector<Handle> morphisms() const override { return pairs(a_->morphisms(), b_->morphisms()); }
  bool same_as(const CategoryImpl& other) const override {
    auto* o = dynamic_cast<const ProductCategory*>(&other);
    return o && same_category(a_, o->a_) && same_category(b_, o->b_);
  }
  std::string show_object(const Handle& h) const override {
    return "(" + a_->show_object(h.first()) + "," + b_->show_object(h.second()) + ")";
  }
  std::string show_morphism(const Handle& h) const override {
    return "(" + a_->show_morphism(h.first()) + "," + b_->show_morphism(h.second()) + ")";
  }

 private:
  static std::vector<Handle> pairs(const std::vector<Handle>& xs, const std::vector<Handle>& ys) {
    std::vector<Handle> out;
    for (const auto& x : xs)
      for (const auto& y : ys) out.push_back(Handle::pair(x, y));
    return out;
  }
  Category a_, b_;
};

class VectCategory final : public CategoryImpl {
 public:
  VectCategory(BraidParam q, std::vector<VObject> probes, std::vector<VMorphism> extra)
      : q_(std::move(q)), probes_(std::move(probes)), extra_(std::move(extra)) {}
  std::string name() const override { return "V[q=" + q_.q().str() + "]"; }
  Handle dom(const Handle& m) const override { return m.as_morphism().dom(); }
  Handle cod(const Handle& m) const override { return m.as_morphism().cod(); }
  Handle identity(const Handle& x) const override { return VMorphism::identity(x.as_object()); }
  Handle compose(const Handle& g, const Handle& f) const override { return g.as_morphism() * f.as_morphism(); }
  std::optional<Handle> inverse(const Handle& m) const override {
    auto inv = invert(m.as_morphism());
    if (!inv) return std::nullopt;
    return Handle(*inv.inverse);
  }
  bool finite() const override { return false; }
  std::vector<Handle> objects() const override { return {probes_.begin(), probes_.end()}; }
  std::vector<Handle> morphisms() const override {
    std::vector<Handle> out;
    for (const auto& p : probes_) out.push_back(VMorphism::identity(p));
    for (const auto& f : extra_) out.push_back(f);
    return out;
  }
  bool same_as(const CategoryImpl& other) const override {
    auto* o = dynamic_cast<const VectCategory*>(&other);
    return o && o->q_ == q_;
  }

 private:
  BraidParam q_;
  std::vector<VObject> probes_;
  std::vector<VMorphism> extra_;
};

}  // namespace

Category product_category(Category a, Category b) { return std::make_shared<ProductCategory>(std::move(a), std::move(b)); }

Category vect_category(BraidParam q, std::vector<VObject> probes, std::vector<VMorphism> probe_morphisms) {
  if (probes.empty()) throw std::invalid_argument("the probe list must be nonempty");
  return std::make_shared<VectCategory>(std::move(q), std::move(probes), std::move(probe_morphisms));
}

Report check_category_sample(const Category& c) {
  Report r("category sample " + c->name());
  auto mors = c->morphisms();
  for (const auto& f : mors) {
    if (!(c->compose(c->identity(c->cod(f)), f) == f)) r.fail(c->show_morphism(f), "left identity law fails");
    if (!(c->compose(f, c->identity(c->dom(f))) == f)) r.fail(c->show_morphism(f), "right identity law fails");
  }
  for (const auto& h : mors)
    for (const auto& g : mors) {
      if (!(c->dom(h) == c->cod(g))) continue;
      for (const auto& f : mors) {
        if (!(c->dom(g) == c->cod(f))) continue;
        r.count();
        if (!(c->compose(c->compose(h, g), f) == c->compose(h, c->compose(g, f))))
          r.fail("(" + c->show_morphism(h) + "," + c->show_morphism(g) + "," + c->show_morphism(f) + ")", "associativity fails");
      }
    }
  return r;
}

Functor::Functor(Category dom, Category cod, Map omap, Map mmap, std::string name)
    : dom_(std::move(dom)), cod_(std::move(cod)), omap_(std::move(omap)), mmap_(std::move(mmap)), name_(std::move(name)) {}

Functor Functor::identity(Category c) {
  auto id = [](const Handle& h) { return h; };
  return Functor(c, c, id, id, "1");
}

Functor Functor::constant(Category cod, Handle object) {
  Category one = terminal_category();
  Handle idm = cod->identity(object);
  return Functor(
      one, cod, [object](const Handle&) { return object; }, [idm](const Handle&) { return idm; },
      "const " + object.str());
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(g.dom(), f.cod()))
    throw BoundaryError("functor composition: " + f.cod()->name() + " vs " + g.dom()->name());
  return Functor(
      f.dom(), g.cod(), [g, f](const Handle& x) { return g.on_object(f.on_object(x)); },
      [g, f](const Handle& m) { return g.on_morphism(f.on_morphism(m)); }, g.name() + "." + f.name());
}

Functor product(const Functor& f, const Functor& g) {
  return Functor(
      product_category(f.dom(), g.dom()), product_category(f.cod(), g.cod()),
      [f, g](const Handle& x) { return Handle::pair(f.on_object(x.first()), g.on_object(x.second())); },
      [f, g](const Handle& m) { return Handle::pair(f.on_morphism(m.first()), g.on_morphism(m.second())); },
      f.name() + "x" + g.name());
}

Functor table_functor(Category dom, Category cod, std::map<Handle, Handle> omap, std::map<Handle, Handle> mmap,
                      std::string name) {
  auto o = std::make_shared<const std::map<Handle, Handle>>(std::move(omap));
  auto m = std::make_shared<const std::map<Handle, Handle>>(std::move(mmap));
  auto look = [](std::shared_ptr<const std::map<Handle, Handle>> table, std::string what) {
    return [table, what](const Handle& h) {
      auto it = table->find(h);
      if (it == table->end()) throw std::out_of_range(what + " table has no entry for " + h.str());
      return it->second;
    };
  };
  return Functor(std::move(dom), std::move(cod), look(o, name + " object"), look(m, name + " morphism"), name);
}

Verdict functor_equal(const Functor& f, const Functor& g) {
  if (!same_category(f.dom(), g.dom()) || !same_category(f.cod(), g.cod()))
    return Verdict::fail("functors " + f.name() + " and " + g.name() + " have different boundaries");
  for (const auto& x : f.dom()->objects())
    if (!(f.on_object(x) == g.on_object(x)))
      return Verdict::fail("functors " + f.name() + " and " + g.name() + " differ on object " + f.dom()->show_object(x));
  // Functors preserve identities, so those are settled by the objects.
  const Category& c = f.dom();
  for (const auto& m : c->morphisms()) {
    if (m == c->identity(c->dom(m))) continue;
    if (!(f.on_morphism(m) == g.on_morphism(m)))
      return Verdict::fail("functors " + f.name() + " and " + g.name() + " differ on morphism " + c->show_morphism(m));
  }
  return Verdict::pass();
}

Report check_functor(const Functor& f) {
  Report r("functor " + f.name());
  const auto& c = f.dom();
  const auto& d = f.cod();
  for (const auto& x : c->objects())
    if (!(f.on_morphism(c->identity(x)) == d->identity(f.on_object(x))))
      r.fail(c->show_object(x), "identity not preserved");
  auto mors = c->morphisms();
  for (const auto& m : mors) {
    Handle fm = f.on_morphism(m);
    if (!(d->dom(fm) == f.on_object(c->dom(m))) || !(d->cod(fm) == f.on_object(c->cod(m))))
      r.fail(c->show_morphism(m), "source or target not preserved");
  }
  if (!r.passed()) return r;
  for (const auto& g : mors)
    for (const auto& m : mors) {
      if (!(c->dom(g) == c->cod(m))) continue;
      r.count();
      if (!(f.on_morphism(c->compose(g, m)) == d->compose(f.on_morphism(g), f.on_morphism(m))))
        r.fail("(" + c->show_morphism(g) + "," + c->show_morphism(m) + ")", "composition not preserved");
    }
  return r;
}

Report check_functor_data(const FunctorData& f) {
  Report r("functor data");
  if (!(f.omap.domain() == f.dom->object_set()) || !(f.omap.codomain() == f.cod->object_set()))
    r.fail("omap", "object map has the wrong domain or codomain");
  if (!(f.mmap.domain() == f.dom->morphism_set()) || !(f.mmap.codomain() == f.cod->morphism_set()))
    r.fail("mmap", "morphism map has the wrong domain or codomain");
  if (!r.passed()) return r;
  const FinCategory& c = *f.dom;
  const FinCategory& d = *f.cod;
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (f.mmap(c.id(x)) != d.id(f.omap(x))) r.fail(c.object_set()[x].str(), "identity not preserved");
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (d.src(f.mmap(m)) != f.omap(c.src(m)) || d.tgt(f.mmap(m)) != f.omap(c.tgt(m)))
      r.fail(c.morphism_set()[m].str(), "source or target not preserved");
  if (!r.passed()) return r;
  for (std::size_t g = 0; g < c.num_morphisms(); ++g)
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
      if (c.src(g) != c.tgt(m)) continue;
      if (f.mmap(c.comp(g, m)) != d.comp(f.mmap(g), f.mmap(m)))
        r.fail("(" + c.morphism_set()[g].str() + "," + c.morphism_set()[m].str() + ")", "composition not preserved");
    }
  return r;
}

Functor make_functor(const FunctorData& f) {
  Report r = check_functor_data(f);
  if (!r.passed()) throw CategoryError(std::move(r));
  FinFn om = f.omap, mm = f.mmap;
  return Functor(
      f.dom, f.cod, [om](const Handle& x) { return Handle::index(om(x.as_index())); },
      [mm](const Handle& m) { return Handle::index(mm(m.as_index())); }, "F");
}

NatTrans::NatTrans(Functor from, Functor to, Components components)
    : from_(std::move(from)), to_(std::move(to)), c_(std::move(components)) {
  if (!same_category(from_.dom(), to_.dom()) || !same_category(from_.cod(), to_.cod()))
    throw BoundaryError("natural transformation between functors with different boundaries");
}

NatTrans NatTrans::identity(const Functor& f) {
  return NatTrans(f, f, [f](const Handle& x) { return f.cod()->identity(f.on_object(x)); });
}

NatTrans vcomp(const NatTrans& second, const NatTrans& first) {
  Category c = first.to().cod();
  return NatTrans(first.from(), second.to(),
                  [second, first, c](const Handle& x) { return c->compose(second.at(x), first.at(x)); });
}

NatTrans hcomp(const NatTrans& g, const NatTrans& f) {
  // (g∘f)_X = g_{f'X} ∘ G(f_X)
  Category e = g.to().cod();
  return NatTrans(compose(g.from(), f.from()), compose(g.to(), f.to()), [g, f, e](const Handle& x) {
    return e->compose(g.at(f.to().on_object(x)), g.from().on_morphism(f.at(x)));
  });
}

NatTrans product(const NatTrans& f, const NatTrans& g) {
  return NatTrans(product(f.from(), g.from()), product(f.to(), g.to()),
                  [f, g](const Handle& x) { return Handle::pair(f.at(x.first()), g.at(x.second())); });
}

NatTrans whisker_left(const Functor& g, const NatTrans& f) { return hcomp(NatTrans::identity(g), f); }
NatTrans whisker_right(const NatTrans& g, const Functor& f) { return hcomp(g, NatTrans::identity(f)); }

Report check_naturality(const NatTrans& n) {
  Report r("naturality");
  const auto& c = n.from().dom();
  const auto& d = n.from().cod();
  for (const auto& x : c->objects()) {
    Handle a = n.at(x);
    if (!(d->dom(a) == n.from().on_object(x)) || !(d->cod(a) == n.to().on_object(x)))
      r.fail(c->show_object(x), "component has the wrong boundary");
  }
  if (!r.passed()) return r;
  for (const auto& m : c->morphisms()) {
    r.count();
    Handle lhs = d->compose(n.to().on_morphism(m), n.at(c->dom(m)));
    Handle rhs = d->compose(n.at(c->cod(m)), n.from().on_morphism(m));
    if (!(lhs == rhs)) r.fail(c->show_morphism(m), "naturality square does not commute");
  }
  return r;
}

std::optional<std::string> nat_difference(const NatTrans& a, const NatTrans& b) {
  if (auto v = functor_equal(a.from(), b.from()); !v) return "sources differ: " + v.witness;
  if (auto v = functor_equal(a.to(), b.to()); !v) return "targets differ: " + v.witness;
  const auto& c = a.from().dom();
  for (const auto& x : c->objects())
    if (!(a.at(x) == b.at(x)))
      return "component at " + c->show_object(x) + ": " + a.at(x).str() + " vs " + b.at(x).str();
  return std::nullopt;
}

Verdict nat_is_iso(const NatTrans& n) {
  const auto& c = n.from().dom();
  for (const auto& x : c->objects())
    if (!n.from().cod()->inverse(n.at(x))) return Verdict::fail("component at " + c->show_object(x) + " is not invertible");
  return Verdict::pass();
}

std::optional<NatTrans> nat_inverse(const NatTrans& n) {
  if (!nat_is_iso(n)) return std::nullopt;
  Category d = n.from().cod();
  return NatTrans(n.to(), n.from(), [n, d](const Handle& x) {
    auto inv = d->inverse(n.at(x));
    if (!inv) throw std::domain_error("component at " + x.str() + " is not invertible");
    return *inv;
  });
}

Report check_nat_trans_data(const NatTransData& n) {
  Report r("natural transformation data");
  r.absorb(check_functor_data(n.from));
  r.absorb(check_functor_data(n.to));
  if (!r.passed()) return r;
  if (!n.from.dom->same_as(*n.to.dom) || !n.from.cod->same_as(*n.to.cod)) {
    r.fail("functors", "different boundaries");
    return r;
  }
  const FinCategory& c = *n.from.dom;
  const FinCategory& d = *n.from.cod;
  if (n.components.size() != c.num_objects()) {
    r.fail("components", "one component per object is required");
    return r;
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    std::size_t a = n.components[x];
    if (a >= d.num_morphisms() || d.src(a) != n.from.omap(x) || d.tgt(a) != n.to.omap(x))
      r.fail(c.object_set()[x].str(), "component has the wrong boundary");
  }
  if (!r.passed()) return r;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (d.comp(n.to.mmap(m), n.components[c.src(m)]) != d.comp(n.components[c.tgt(m)], n.from.mmap(m)))
      r.fail(c.morphism_set()[m].str(), "naturality square does not commute");
  return r;
}

NatTrans make_nat_trans(const NatTransData& n) {
  Report r = check_nat_trans_data(n);
  if (!r.passed()) throw CategoryError(std::move(r));
  auto comps = n.components;
  return NatTrans(make_functor(n.from), make_functor(n.to),
                  [comps](const Handle& x) { return Handle::index(comps[x.as_index()]); });
}

Functor tensor_left(const Category& v, const VObject& p) {
  return Functor(
      v, v, [p](const Handle& x) { return Handle(tensor_obj(p, x.as_object())); },
      [p](const Handle& f) { return Handle(tensor_mor(VMorphism::identity(p), f.as_morphism())); }, p.str() + "⊗-");
}

NatTrans tensor_left(const Category& v, const VMorphism& f) {
  return NatTrans(tensor_left(v, f.dom()), tensor_left(v, f.cod()),
                  [f](const Handle& x) { return Handle(tensor_mor(f, VMorphism::identity(x.as_object()))); });
}

Functor vect_tensor_functor(const Category& v) {
  return Functor(
      product_category(v, v), v,
      [](const Handle& x) { return Handle(tensor_obj(x.first().as_object(), x.second().as_object())); },
      [](const Handle& m) { return Handle(tensor_mor(m.first().as_morphism(), m.second().as_morphism())); }, "⊗");
}

Functor vect_unit_functor(const Category& v) { return Functor::constant(v, Handle(VObject::unit())); }

NatTrans VectImage::product_compatibility(const VObject& p, const VObject& r) const {
  Functor t = vect_tensor_functor(v);
  Functor from = compose(t, product(tensor_left(v, p), tensor_left(v, r)));
  Functor to = compose(tensor_left(v, tensor_obj(p, r)), t);
  BraidParam qq = q;
  return NatTrans(from, to, [p, r, qq](const Handle& xy) {
    const VObject& x = xy.first().as_object();
    const VObject& y = xy.second().as_object();
    VMorphism mid = braiding_inverse(r, x, qq);  // x⊗r -> r⊗x
    return Handle(tensor_mor(tensor_mor(VMorphism::identity(p), mid), VMorphism::identity(y)));
  });
}

NatTrans VectImage::product_compatibility_inverse(const VObject& p, const VObject& r) const {
  Functor t = vect_tensor_functor(v);
  Functor from = compose(tensor_left(v, tensor_obj(p, r)), t);
  Functor to = compose(t, product(tensor_left(v, p), tensor_left(v, r)));
  BraidParam qq = q;
  return NatTrans(from, to, [p, r, qq](const Handle& xy) {
    const VObject& x = xy.first().as_object();
    const VObject& y = xy.second().as_object();
    VMorphism mid = braiding(r, x, qq);  // r⊗x -> x⊗r
    return Handle(tensor_mor(tensor_mor(VMorphism::identity(p), mid), VMorphism::identity(y)));
  });
}

VectImage vect_as_lazy_category(BraidParam q, std::vector<VObject> probes, std::vector<VMorphism> probe_morphisms) {
  Category v = vect_category(q, std::move(probes), std::move(probe_morphisms));
  return VectImage{v, q, vect_unit_functor(v), VMorphism::identity(VObject::unit())};
}

}  // namespace spanv
