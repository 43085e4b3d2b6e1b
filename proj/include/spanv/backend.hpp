#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "spanv/cat.hpp"
#include "spanv/vect.hpp"

namespace spanv {

template <class T>
struct Inverse2 {
  std::optional<T> inverse;
  std::string witness;
};

// Operations a base bicategory must supply to label spans. Backends are
// strict: hcomp1 is associative and unital on the nose (as judged by eq1).
template <class B>
concept Backend = requires(const B& bk, const typename B::Obj0& x, const typename B::Obj1& a,
                           const typename B::Obj2& f) {
  { bk.src1(a) } -> std::convertible_to<typename B::Obj0>;
  { bk.tgt1(a) } -> std::convertible_to<typename B::Obj0>;
  { bk.id1(x) } -> std::convertible_to<typename B::Obj1>;
  { bk.comp1(a, a) } -> std::convertible_to<typename B::Obj1>;
  { bk.dom2(f) } -> std::convertible_to<typename B::Obj1>;
  { bk.cod2(f) } -> std::convertible_to<typename B::Obj1>;
  { bk.id2(a) } -> std::convertible_to<typename B::Obj2>;
  { bk.vcomp2(f, f) } -> std::convertible_to<typename B::Obj2>;
  { bk.hcomp2(f, f) } -> std::convertible_to<typename B::Obj2>;
  { bk.unit0() } -> std::convertible_to<typename B::Obj0>;
  { bk.tensor0(x, x) } -> std::convertible_to<typename B::Obj0>;
  { bk.tensor1(a, a) } -> std::convertible_to<typename B::Obj1>;
  { bk.tensor2(f, f) } -> std::convertible_to<typename B::Obj2>;
  { bk.interchange(a, a, a, a) } -> std::convertible_to<typename B::Obj2>;
  { bk.eq0(x, x) } -> std::convertible_to<bool>;
  { bk.eq1(a, a) } -> std::convertible_to<bool>;
  { bk.diff2(f, f) } -> std::convertible_to<std::optional<std::string>>;
  { bk.inverse2(f) } -> std::convertible_to<Inverse2<typename B::Obj2>>;
  { bk.show1(a) } -> std::convertible_to<std::string>;
};

// V as a one-object bicategory: 1-cells are objects, ∘ and ⊗ are both the
// tensor product, and the interchanger of the monoidal structure is
// 1⊗c⊗1 built from the braiding.
struct VectBackend {
  struct Obj0 {
    friend bool operator==(Obj0, Obj0) { return true; }
  };
  using Obj1 = VObject;
  using Obj2 = VMorphism;

  BraidParam q;

  Obj0 src1(const Obj1&) const { return {}; }
  Obj0 tgt1(const Obj1&) const { return {}; }
  Obj1 id1(const Obj0&) const { return VObject::unit(); }
  Obj1 comp1(const Obj1& b, const Obj1& a) const { return tensor_obj(b, a); }
  Obj1 dom2(const Obj2& f) const { return f.dom(); }
  Obj1 cod2(const Obj2& f) const { return f.cod(); }
  Obj2 id2(const Obj1& a) const { return VMorphism::identity(a); }
  Obj2 vcomp2(const Obj2& g, const Obj2& f) const { return g * f; }
  Obj2 hcomp2(const Obj2& g, const Obj2& f) const { return tensor_mor(g, f); }
  Obj0 unit0() const { return {}; }
  Obj0 tensor0(const Obj0&, const Obj0&) const { return {}; }
  Obj1 tensor1(const Obj1& a, const Obj1& b) const { return tensor_obj(a, b); }
  Obj2 tensor2(const Obj2& f, const Obj2& g) const { return tensor_mor(f, g); }
  // (b⊗b2)∘(a⊗a2) ⇒ (b∘a)⊗(b2∘a2), i.e. b⊗b2⊗a⊗a2 → b⊗a⊗b2⊗a2.
  Obj2 interchange(const Obj1& b, const Obj1& b2, const Obj1& a, const Obj1& a2) const {
    return tensor_mor(tensor_mor(VMorphism::identity(b), braiding(b2, a, q)), VMorphism::identity(a2));
  }
  bool eq0(const Obj0&, const Obj0&) const { return true; }
  bool eq1(const Obj1& a, const Obj1& b) const { return a == b; }
  std::optional<std::string> diff2(const Obj2& f, const Obj2& g) const { return first_difference(f, g); }
  Inverse2<Obj2> inverse2(const Obj2& f) const {
    auto inv = invert(f);
    return {inv.inverse, inv.witness};
  }
  std::string show1(const Obj1& a) const { return a.str(); }
};

// Cat at desk scale: categories, functors, natural transformations, with
// the Cartesian product as tensor. Equality of functors and transformations
// is extensional on each category's sample.
struct CatBackend {
  using Obj0 = Category;
  using Obj1 = Functor;
  using Obj2 = NatTrans;

  Obj0 src1(const Obj1& a) const { return a.dom(); }
  Obj0 tgt1(const Obj1& a) const { return a.cod(); }
  Obj1 id1(const Obj0& x) const { return Functor::identity(x); }
  Obj1 comp1(const Obj1& b, const Obj1& a) const { return compose(b, a); }
  Obj1 dom2(const Obj2& f) const { return f.from(); }
  Obj1 cod2(const Obj2& f) const { return f.to(); }
  Obj2 id2(const Obj1& a) const { return NatTrans::identity(a); }
  Obj2 vcomp2(const Obj2& g, const Obj2& f) const { return vcomp(g, f); }
  Obj2 hcomp2(const Obj2& g, const Obj2& f) const { return hcomp(g, f); }
  Obj0 unit0() const { return terminal_category(); }
  Obj0 tensor0(const Obj0& x, const Obj0& y) const { return product_category(x, y); }
  Obj1 tensor1(const Obj1& a, const Obj1& b) const { return product(a, b); }
  Obj2 tensor2(const Obj2& f, const Obj2& g) const { return product(f, g); }
  Obj2 interchange(const Obj1& b, const Obj1& b2, const Obj1& a, const Obj1& a2) const {
    Functor from = compose(product(b, b2), product(a, a2));
    Functor to = product(compose(b, a), compose(b2, a2));
    return NatTrans(from, to, [to](const Handle& x) { return to.cod()->identity(to.on_object(x)); });
  }
  bool eq0(const Obj0& x, const Obj0& y) const { return same_category(x, y); }
  bool eq1(const Obj1& a, const Obj1& b) const { return static_cast<bool>(functor_equal(a, b)); }
  std::optional<std::string> diff2(const Obj2& f, const Obj2& g) const { return nat_difference(f, g); }
  Inverse2<Obj2> inverse2(const Obj2& f) const {
    auto v = nat_is_iso(f);
    if (!v) return {std::nullopt, v.witness};
    return {nat_inverse(f), ""};
  }
  std::string show1(const Obj1& a) const { return a.name(); }
};

static_assert(Backend<VectBackend>);
static_assert(Backend<CatBackend>);

}  // namespace spanv
