#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "spanv/finset.hpp"
#include "spanv/report.hpp"
#include "spanv/vect.hpp"

namespace spanv {

// Object or morphism of some category: a table index, a vector space, a
// linear map, or a pair (for product categories).
class Handle {
 public:
  Handle() = default;
  static Handle index(std::size_t i) { return Handle(Rep(i)); }
  Handle(VObject x) : v_(std::move(x)) {}
  Handle(VMorphism f) : v_(std::move(f)) {}
  static Handle pair(Handle a, Handle b) {
    return Handle(Rep(std::make_shared<const std::pair<Handle, Handle>>(std::move(a), std::move(b))));
  }

  bool is_index() const { return v_.index() == 1; }
  bool is_object() const { return v_.index() == 2; }
  bool is_morphism() const { return v_.index() == 3; }
  bool is_pair() const { return v_.index() == 4; }
  std::size_t as_index() const;
  const VObject& as_object() const;
  const VMorphism& as_morphism() const;
  const Handle& first() const;
  const Handle& second() const;

  std::string str() const;
  friend bool operator==(const Handle& a, const Handle& b);
  friend bool operator<(const Handle& a, const Handle& b);  // index and pair handles only

 private:
  using Rep = std::variant<std::monostate, std::size_t, VObject, VMorphism,
                           std::shared_ptr<const std::pair<Handle, Handle>>>;
  explicit Handle(Rep r) : v_(std::move(r)) {}
  Rep v_;
};

class CategoryImpl {
 public:
  virtual ~CategoryImpl() = default;
  virtual std::string name() const = 0;
  virtual Handle dom(const Handle& m) const = 0;
  virtual Handle cod(const Handle& m) const = 0;
  virtual Handle identity(const Handle& x) const = 0;
  virtual Handle compose(const Handle& g, const Handle& f) const = 0;  // g after f
  virtual std::optional<Handle> inverse(const Handle& m) const = 0;
  virtual bool finite() const = 0;
  // All objects/morphisms of a finite category; the probe sample otherwise.
  virtual std::vector<Handle> objects() const = 0;
  virtual std::vector<Handle> morphisms() const = 0;
  virtual std::vector<Handle> hom(const Handle& x, const Handle& y) const;
  virtual bool same_as(const CategoryImpl& other) const { return this == &other; }
  virtual std::string show_object(const Handle& h) const { return h.str(); }
  virtual std::string show_morphism(const Handle& h) const { return h.str(); }
};

using Category = std::shared_ptr<const CategoryImpl>;

bool same_category(const Category& a, const Category& b);

// Raw composition tables; composition is keyed by (g, f) meaning g∘f.
struct CategoryTables {
  FinSet objects;
  FinSet morphisms;
  std::vector<std::size_t> src, tgt;  // per morphism
  std::vector<std::size_t> identities;  // per object
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition;
};

// Lists every missing/ill-typed composite and every associativity or unit violation.
Report check_category(const CategoryTables& t);

class CategoryError : public std::invalid_argument {
 public:
  explicit CategoryError(Report r);
  const Report& report() const { return report_; }

 private:
  Report report_;
};

class FinCategory final : public CategoryImpl, public std::enable_shared_from_this<FinCategory> {
 public:
  explicit FinCategory(CategoryTables t, std::string name = "D");  // throws CategoryError
  static std::shared_ptr<const FinCategory> make(CategoryTables t, std::string name = "D") {
    return std::make_shared<const FinCategory>(std::move(t), std::move(name));
  }

  const CategoryTables& tables() const { return t_; }
  std::size_t num_objects() const { return t_.objects.size(); }
  std::size_t num_morphisms() const { return t_.morphisms.size(); }
  std::size_t src(std::size_t f) const { return t_.src[f]; }
  std::size_t tgt(std::size_t f) const { return t_.tgt[f]; }
  std::size_t id(std::size_t x) const { return t_.identities[x]; }
  std::size_t comp(std::size_t g, std::size_t f) const;  // throws unless src(g) = tgt(f)
  std::optional<std::size_t> inverse_of(std::size_t f) const;
  const FinSet& object_set() const { return t_.objects; }
  const FinSet& morphism_set() const { return t_.morphisms; }
  FinFn src_fn() const { return FinFn(t_.morphisms, t_.objects, t_.src); }
  FinFn tgt_fn() const { return FinFn(t_.morphisms, t_.objects, t_.tgt); }

  std::string name() const override { return name_; }
  Handle dom(const Handle& m) const override { return Handle::index(src(m.as_index())); }
  Handle cod(const Handle& m) const override { return Handle::index(tgt(m.as_index())); }
  Handle identity(const Handle& x) const override { return Handle::index(id(x.as_index())); }
  Handle compose(const Handle& g, const Handle& f) const override {
    return Handle::index(comp(g.as_index(), f.as_index()));
  }
  std::optional<Handle> inverse(const Handle& m) const override;
  bool finite() const override { return true; }
  std::vector<Handle> objects() const override;
  std::vector<Handle> morphisms() const override;
  std::vector<Handle> hom(const Handle& x, const Handle& y) const override;
  bool same_as(const CategoryImpl& other) const override;
  std::string show_object(const Handle& h) const override;
  std::string show_morphism(const Handle& h) const override;

 private:
  CategoryTables t_;
  std::string name_;
};

using FinCategoryPtr = std::shared_ptr<const FinCategory>;

// Small builders. Morphism atoms are the monoid elements / pairs (x,y) with
// target x and source y for the indiscrete category.
FinCategoryPtr monoid_category(const FinSet& elements, const std::vector<std::vector<std::size_t>>& table,
                               std::size_t unit, std::string name = "M");
FinCategoryPtr cyclic_group_category(std::size_t n, std::string name = "Z");
FinCategoryPtr indiscrete_category(const FinSet& objects, std::string name = "I");
FinCategoryPtr discrete_category(const FinSet& objects, std::string name = "S");
FinCategoryPtr terminal_category();

Verdict is_groupoid(const FinCategory& c);

Category product_category(Category a, Category b);
// Lazily evaluated V: objects are VObjects, morphisms are VMorphisms; the
// probe objects and morphisms form the sample used by every check.
Category vect_category(BraidParam q, std::vector<VObject> probes, std::vector<VMorphism> probe_morphisms = {});

// Associativity and unit laws on all sampled composable triples.
Report check_category_sample(const Category& c);

class Functor {
 public:
  using Map = std::function<Handle(const Handle&)>;
  Functor(Category dom, Category cod, Map omap, Map mmap, std::string name);
  static Functor identity(Category c);
  static Functor constant(Category cod, Handle object);  // from the terminal category

  const Category& dom() const { return dom_; }
  const Category& cod() const { return cod_; }
  Handle on_object(const Handle& x) const { return omap_(x); }
  Handle on_morphism(const Handle& f) const { return mmap_(f); }
  const std::string& name() const { return name_; }

 private:
  Category dom_, cod_;
  Map omap_, mmap_;
  std::string name_;
};

Functor compose(const Functor& g, const Functor& f);
Functor product(const Functor& f, const Functor& g);
// Functor given by lookup tables on handles (dom must be finite).
Functor table_functor(Category dom, Category cod, std::map<Handle, Handle> omap, std::map<Handle, Handle> mmap,
                      std::string name);
Verdict functor_equal(const Functor& f, const Functor& g);  // on the dom sample
Report check_functor(const Functor& f);                     // on the dom sample

struct FunctorData {
  FinCategoryPtr dom, cod;
  FinFn omap, mmap;
};
Report check_functor_data(const FunctorData& f);
Functor make_functor(const FunctorData& f);  // throws CategoryError

class NatTrans {
 public:
  using Components = std::function<Handle(const Handle&)>;
  NatTrans(Functor from, Functor to, Components components);
  static NatTrans identity(const Functor& f);

  const Functor& from() const { return from_; }
  const Functor& to() const { return to_; }
  Handle at(const Handle& x) const { return c_(x); }

 private:
  Functor from_, to_;
  Components c_;
};

NatTrans vcomp(const NatTrans& second, const NatTrans& first);
NatTrans hcomp(const NatTrans& g, const NatTrans& f);  // Godement product
NatTrans product(const NatTrans& f, const NatTrans& g);
NatTrans whisker_left(const Functor& g, const NatTrans& f);   // g f
NatTrans whisker_right(const NatTrans& g, const Functor& f);  // g f
Report check_naturality(const NatTrans& n);
std::optional<std::string> nat_difference(const NatTrans& a, const NatTrans& b);
Verdict nat_is_iso(const NatTrans& n);
std::optional<NatTrans> nat_inverse(const NatTrans& n);

struct NatTransData {
  FunctorData from, to;
  std::vector<std::size_t> components;  // per object of from.dom
};
Report check_nat_trans_data(const NatTransData& n);
NatTrans make_nat_trans(const NatTransData& n);  // throws CategoryError

// Image of V under p ↦ p⊗(−).
Functor tensor_left(const Category& v, const VObject& p);
NatTrans tensor_left(const Category& v, const VMorphism& f);
// The tensor functor V×V → V and the unit functor 1 → V.
Functor vect_tensor_functor(const Category& v);
Functor vect_unit_functor(const Category& v);

struct VectImage {
  Category v;
  BraidParam q;
  // unit comparison: the functor 1 → V picking K, and K⊗K ≅ K
  Functor unit;
  VMorphism unit_iso;
  // Product compatibility for p⊗(−), r⊗(−): the transformation
  // ⊗∘(p⊗− × r⊗−) ⇒ (p⊗r)⊗(−)∘⊗ with components 1⊗c⁻¹_{r,X}⊗1 and its inverse.
  NatTrans product_compatibility(const VObject& p, const VObject& r) const;
  NatTrans product_compatibility_inverse(const VObject& p, const VObject& r) const;
};

VectImage vect_as_lazy_category(BraidParam q, std::vector<VObject> probes, std::vector<VMorphism> probe_morphisms = {});

}  // namespace spanv
