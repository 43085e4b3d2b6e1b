#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "spanv/atom.hpp"

namespace spanv {

// Raised when two cells are composed along mismatched boundaries.
class BoundaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<Atom> elements);  // throws on duplicates
  static FinSet singleton();                    // {()}
  static FinSet range(std::size_t n);           // {0, ..., n-1}

  std::size_t size() const { return impl_->elements.size(); }
  bool empty() const { return size() == 0; }
  Atom operator[](std::size_t i) const { return impl_->elements[i]; }
  std::span<const Atom> elements() const { return impl_->elements; }
  std::optional<std::size_t> find(Atom a) const;
  std::size_t index_of(Atom a) const;  // throws if absent
  bool contains(Atom a) const { return find(a).has_value(); }

  std::string str() const;
  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Impl {
    std::vector<Atom> elements;
    std::unordered_map<Atom, std::size_t> index;
  };
  std::shared_ptr<const Impl> impl_;
};

// Pairs (a,b) in lexicographic index order.
FinSet product(const FinSet& a, const FinSet& b);

class FinFn {
 public:
  FinFn(FinSet domain, FinSet codomain, std::vector<std::size_t> assignment);
  template <class F>
  static FinFn from_atoms(FinSet domain, FinSet codomain, F&& f) {
    std::vector<std::size_t> v;
    v.reserve(domain.size());
    for (Atom a : domain.elements()) v.push_back(codomain.index_of(f(a)));
    return FinFn(std::move(domain), std::move(codomain), std::move(v));
  }
  static FinFn identity(const FinSet& x);
  static FinFn diagonal(const FinSet& x);  // x -> x*x
  static FinFn terminal(const FinSet& x);  // x -> singleton
  static FinFn first_projection(const FinSet& a, const FinSet& b);
  static FinFn second_projection(const FinSet& a, const FinSet& b);

  const FinSet& domain() const { return dom_; }
  const FinSet& codomain() const { return cod_; }
  std::span<const std::size_t> assignment() const { return map_; }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  Atom operator()(Atom a) const { return cod_[map_[dom_.index_of(a)]]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  std::optional<FinFn> inverse() const;

  friend bool operator==(const FinFn& f, const FinFn& g);

 private:
  FinSet dom_, cod_;
  std::vector<std::size_t> map_;
};

FinFn compose(const FinFn& g, const FinFn& f);        // g after f
FinFn product_fn(const FinFn& f, const FinFn& g);     // f x g
FinFn pair_fn(const FinFn& f, const FinFn& g);        // <f,g> into product

// Y <-left- A -right-> X; src() is X, tgt() is Y.
class Span {
 public:
  Span(FinFn left, FinFn right);
  static Span identity(const FinSet& x);

  const FinSet& apex() const { return left_.domain(); }
  const FinSet& src() const { return right_.codomain(); }
  const FinSet& tgt() const { return left_.codomain(); }
  const FinFn& left() const { return left_; }
  const FinFn& right() const { return right_; }

  friend bool operator==(const Span& a, const Span& b) = default;

 private:
  FinFn left_, right_;
};

class SpanMorphism {
 public:
  SpanMorphism(Span from, Span to, FinFn map);  // checks legs commute
  static SpanMorphism identity(const Span& s);

  const Span& from() const { return from_; }
  const Span& to() const { return to_; }
  const FinFn& map() const { return map_; }

  friend bool operator==(const SpanMorphism& a, const SpanMorphism& b) = default;

 private:
  Span from_, to_;
  FinFn map_;
};

std::string describe_boundary(const FinSet& expected, const FinSet& actual);

// Index pairs (d,c) with b.right(d) = a.left(c), in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> pullback_indices(const Span& b, const Span& a);
Span compose_spans(const Span& b, const Span& a);
SpanMorphism compose_span_morphisms_h(const SpanMorphism& g, const SpanMorphism& f);
SpanMorphism compose_span_morphisms_v(const SpanMorphism& second, const SpanMorphism& first);
Span cartesian_product(const Span& a, const Span& b);
SpanMorphism cartesian_product(const SpanMorphism& f, const SpanMorphism& g);

// ((e,d),c) -> (e,(d,c)) from (c∘b)∘a to c∘(b∘a).
SpanMorphism associator_iso(const Span& c, const Span& b, const Span& a);
SpanMorphism left_unitor_iso(const Span& a);   // 1∘a -> a
SpanMorphism right_unitor_iso(const Span& a);  // a∘1 -> a
std::optional<SpanMorphism> invert(const SpanMorphism& f);

struct RightAdjoint {
  Span adjoint;         // X <- A -> Y
  SpanMorphism unit;    // 1_X => adjoint∘a
  SpanMorphism counit;  // a∘adjoint => 1_Y
};

struct AdjointResult {
  std::optional<RightAdjoint> data;
  std::string witness;
};

AdjointResult right_adjoint_of(const Span& a);

}  // namespace spanv
