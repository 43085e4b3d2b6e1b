#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spanv/backend.hpp"
#include "spanv/finset.hpp"

namespace spanv {

struct Unchecked {};

template <Backend B>
struct Cell0 {
  FinSet carrier;
  std::vector<typename B::Obj0> label;
};

template <Backend B>
Cell0<B> constant_cell0(const FinSet& carrier, const typename B::Obj0& x) {
  return {carrier, std::vector<typename B::Obj0>(carrier.size(), x)};
}

template <Backend B>
std::optional<std::string> cell0_difference(const B& bk, const Cell0<B>& x, const Cell0<B>& y) {
  if (!(x.carrier == y.carrier)) return "carriers differ: " + describe_boundary(x.carrier, y.carrier);
  for (std::size_t i = 0; i < x.label.size(); ++i)
    if (!bk.eq0(x.label[i], y.label[i])) return "labels differ at " + x.carrier[i].str();
  return std::nullopt;
}

// A span Y <-l A -r-> X with labels a(c): x(r c) -> y(l c).
template <Backend B>
class Cell1 {
 public:
  using Obj1 = typename B::Obj1;

  Cell1(const B& bk, Cell0<B> src, Cell0<B> tgt, Span span, std::vector<Obj1> label)
      : Cell1(Unchecked{}, std::move(src), std::move(tgt), std::move(span), std::move(label)) {
    if (!(span_.src() == src_.carrier)) throw BoundaryError("1-cell source: " + describe_boundary(src_.carrier, span_.src()));
    if (!(span_.tgt() == tgt_.carrier)) throw BoundaryError("1-cell target: " + describe_boundary(tgt_.carrier, span_.tgt()));
    if (src_.label.size() != src_.carrier.size() || tgt_.label.size() != tgt_.carrier.size())
      throw BoundaryError("0-cell labeling is not total");
    if (label_.size() != span_.apex().size())
      throw BoundaryError("1-cell has " + std::to_string(label_.size()) + " labels for an apex of size " +
                          std::to_string(span_.apex().size()));
    for (std::size_t c = 0; c < label_.size(); ++c) {
      if (!bk.eq0(bk.src1(label_[c]), src_.label[span_.right()(c)]))
        throw BoundaryError("apex element " + span_.apex()[c].str() + ": label source differs from x(r(c))");
      if (!bk.eq0(bk.tgt1(label_[c]), tgt_.label[span_.left()(c)]))
        throw BoundaryError("apex element " + span_.apex()[c].str() + ": label target differs from y(l(c))");
    }
  }
  Cell1(Unchecked, Cell0<B> src, Cell0<B> tgt, Span span, std::vector<Obj1> label)
      : src_(std::move(src)), tgt_(std::move(tgt)), span_(std::move(span)), label_(std::move(label)) {}

  const Cell0<B>& src() const { return src_; }
  const Cell0<B>& tgt() const { return tgt_; }
  const Span& span() const { return span_; }
  const FinSet& apex() const { return span_.apex(); }
  const Obj1& label(std::size_t c) const { return label_[c]; }
  const std::vector<Obj1>& labels() const { return label_; }

 private:
  Cell0<B> src_, tgt_;
  Span span_;
  std::vector<Obj1> label_;
};

template <Backend B>
std::optional<std::string> cell1_difference(const B& bk, const Cell1<B>& a, const Cell1<B>& b) {
  if (auto d = cell0_difference(bk, a.src(), b.src())) return "sources: " + *d;
  if (auto d = cell0_difference(bk, a.tgt(), b.tgt())) return "targets: " + *d;
  if (!(a.apex() == b.apex())) return "apexes differ: " + describe_boundary(a.apex(), b.apex());
  if (!(a.span() == b.span())) return "span legs differ";
  for (std::size_t c = 0; c < a.labels().size(); ++c)
    if (!bk.eq1(a.label(c), b.label(c)))
      return "labels differ at " + a.apex()[c].str() + ": " + bk.show1(a.label(c)) + " vs " + bk.show1(b.label(c));
  return std::nullopt;
}

// A span map f: A -> A' with components φ_c: a(c) => a'(f c).
template <Backend B>
class Cell2 {
 public:
  using Obj2 = typename B::Obj2;

  Cell2(const B& bk, Cell1<B> from, Cell1<B> to, FinFn map, std::vector<Obj2> components)
      : from_(std::move(from)), to_(std::move(to)), morphism_(from_.span(), to_.span(), std::move(map)),
        comp_(std::move(components)) {
    if (auto d = cell0_difference(bk, from_.src(), to_.src())) throw BoundaryError("2-cell sources: " + *d);
    if (auto d = cell0_difference(bk, from_.tgt(), to_.tgt())) throw BoundaryError("2-cell targets: " + *d);
    if (comp_.size() != from_.apex().size())
      throw BoundaryError("2-cell has " + std::to_string(comp_.size()) + " components for an apex of size " +
                          std::to_string(from_.apex().size()));
    for (std::size_t c = 0; c < comp_.size(); ++c) {
      if (!bk.eq1(bk.dom2(comp_[c]), from_.label(c)))
        throw BoundaryError("apex element " + from_.apex()[c].str() + ": component source differs from a(c)");
      if (!bk.eq1(bk.cod2(comp_[c]), to_.label(morphism_.map()(c))))
        throw BoundaryError("apex element " + from_.apex()[c].str() + ": component target differs from a'(f(c))");
    }
  }
  Cell2(Unchecked, Cell1<B> from, Cell1<B> to, FinFn map, std::vector<Obj2> components)
      : from_(std::move(from)), to_(std::move(to)), morphism_(from_.span(), to_.span(), std::move(map)),
        comp_(std::move(components)) {}

  const Cell1<B>& from() const { return from_; }
  const Cell1<B>& to() const { return to_; }
  const SpanMorphism& morphism() const { return morphism_; }
  const FinFn& map() const { return morphism_.map(); }
  const Obj2& component(std::size_t c) const { return comp_[c]; }
  const std::vector<Obj2>& components() const { return comp_; }

 private:
  Cell1<B> from_, to_;
  SpanMorphism morphism_;
  std::vector<Obj2> comp_;
};

// ---- identities and compositions ----

template <Backend B>
Cell1<B> identity1(const B& bk, const Cell0<B>& x) {
  std::vector<typename B::Obj1> labels;
  for (const auto& l : x.label) labels.push_back(bk.id1(l));
  return Cell1<B>(Unchecked{}, x, x, Span::identity(x.carrier), std::move(labels));
}

template <Backend B>
Cell2<B> identity2(const B& bk, const Cell1<B>& a) {
  std::vector<typename B::Obj2> comps;
  for (const auto& l : a.labels()) comps.push_back(bk.id2(l));
  return Cell2<B>(Unchecked{}, a, a, FinFn::identity(a.apex()), std::move(comps));
}

template <Backend B>
Cell1<B> hcomp1(const B& bk, const Cell1<B>& b, const Cell1<B>& a) {
  if (auto d = cell0_difference(bk, b.src(), a.tgt())) throw BoundaryError("horizontal composition: " + *d);
  Span s = compose_spans(b.span(), a.span());
  std::vector<typename B::Obj1> labels;
  for (auto [d, c] : pullback_indices(b.span(), a.span())) labels.push_back(bk.comp1(b.label(d), a.label(c)));
  return Cell1<B>(Unchecked{}, a.src(), b.tgt(), std::move(s), std::move(labels));
}

template <Backend B>
Cell2<B> hcomp2(const B& bk, const Cell2<B>& g, const Cell2<B>& f) {
  Cell1<B> from = hcomp1(bk, g.from(), f.from());
  Cell1<B> to = hcomp1(bk, g.to(), f.to());
  SpanMorphism m = compose_span_morphisms_h(g.morphism(), f.morphism());
  std::vector<typename B::Obj2> comps;
  for (auto [d, c] : pullback_indices(g.from().span(), f.from().span()))
    comps.push_back(bk.hcomp2(g.component(d), f.component(c)));
  return Cell2<B>(Unchecked{}, std::move(from), std::move(to), m.map(), std::move(comps));
}

template <Backend B>
Cell2<B> vcomp2(const B& bk, const Cell2<B>& second, const Cell2<B>& first) {
  if (auto d = cell1_difference(bk, first.to(), second.from())) throw BoundaryError("vertical composition: " + *d);
  std::vector<typename B::Obj2> comps;
  for (std::size_t c = 0; c < first.components().size(); ++c)
    comps.push_back(bk.vcomp2(second.component(first.map()(c)), first.component(c)));
  return Cell2<B>(Unchecked{}, first.from(), second.to(), compose(second.map(), first.map()), std::move(comps));
}

// Vertical composite of a chain given in order of application.
template <Backend B>
Cell2<B> chain(const B& bk, const std::vector<Cell2<B>>& steps) {
  if (steps.empty()) throw std::invalid_argument("empty chain of 2-cells");
  Cell2<B> acc = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i) acc = vcomp2(bk, steps[i], acc);
  return acc;
}

// ---- monoidal structure ----

template <Backend B>
Cell0<B> unit_cell0(const B& bk) {
  return {FinSet::singleton(), {bk.unit0()}};
}

template <Backend B>
Cell0<B> tensor0(const B& bk, const Cell0<B>& x, const Cell0<B>& y) {
  std::vector<typename B::Obj0> labels;
  for (const auto& a : x.label)
    for (const auto& b : y.label) labels.push_back(bk.tensor0(a, b));
  return {product(x.carrier, y.carrier), std::move(labels)};
}

template <Backend B>
Cell1<B> tensor1(const B& bk, const Cell1<B>& a, const Cell1<B>& b) {
  std::vector<typename B::Obj1> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(bk.tensor1(x, y));
  return Cell1<B>(Unchecked{}, tensor0(bk, a.src(), b.src()), tensor0(bk, a.tgt(), b.tgt()),
                  cartesian_product(a.span(), b.span()), std::move(labels));
}

template <Backend B>
Cell2<B> tensor2(const B& bk, const Cell2<B>& f, const Cell2<B>& g) {
  std::vector<typename B::Obj2> comps;
  for (const auto& x : f.components())
    for (const auto& y : g.components()) comps.push_back(bk.tensor2(x, y));
  return Cell2<B>(Unchecked{}, tensor1(bk, f.from(), g.from()), tensor1(bk, f.to(), g.to()),
                  product_fn(f.map(), g.map()), std::move(comps));
}

// ---- coherence cells ----

template <Backend B>
Cell2<B> associator2(const B& bk, const Cell1<B>& c, const Cell1<B>& b, const Cell1<B>& a) {
  Cell1<B> from = hcomp1(bk, hcomp1(bk, c, b), a);
  Cell1<B> to = hcomp1(bk, c, hcomp1(bk, b, a));
  SpanMorphism m = associator_iso(c.span(), b.span(), a.span());
  std::vector<typename B::Obj2> comps;
  for (const auto& l : from.labels()) comps.push_back(bk.id2(l));
  return Cell2<B>(bk, std::move(from), std::move(to), m.map(), std::move(comps));
}

template <Backend B>
Cell2<B> left_unitor2(const B& bk, const Cell1<B>& a) {
  Cell1<B> from = hcomp1(bk, identity1(bk, a.tgt()), a);
  SpanMorphism m = left_unitor_iso(a.span());
  std::vector<typename B::Obj2> comps;
  for (const auto& l : from.labels()) comps.push_back(bk.id2(l));
  return Cell2<B>(bk, std::move(from), a, m.map(), std::move(comps));
}

template <Backend B>
Cell2<B> right_unitor2(const B& bk, const Cell1<B>& a) {
  Cell1<B> from = hcomp1(bk, a, identity1(bk, a.src()));
  SpanMorphism m = right_unitor_iso(a.span());
  std::vector<typename B::Obj2> comps;
  for (const auto& l : from.labels()) comps.push_back(bk.id2(l));
  return Cell2<B>(bk, std::move(from), a, m.map(), std::move(comps));
}

template <Backend B>
struct Inversion2 {
  std::optional<Cell2<B>> inverse;
  std::string witness;
  explicit operator bool() const { return inverse.has_value(); }
};

// Invertible iff the span map is a bijection and every component is invertible.
template <Backend B>
Inversion2<B> invert2(const B& bk, const Cell2<B>& t) {
  if (!t.map().is_injective()) {
    for (std::size_t i = 0; i < t.map().domain().size(); ++i)
      for (std::size_t j = i + 1; j < t.map().domain().size(); ++j)
        if (t.map()(i) == t.map()(j))
          return {std::nullopt, "span map identifies " + t.from().apex()[i].str() + " and " +
                                    t.from().apex()[j].str() + " (both sent to " + t.to().apex()[t.map()(i)].str() + ")"};
  }
  auto inv = t.map().inverse();
  if (!inv) {
    std::vector<bool> hit(t.to().apex().size(), false);
    for (std::size_t i = 0; i < t.map().domain().size(); ++i) hit[t.map()(i)] = true;
    for (std::size_t j = 0; j < hit.size(); ++j)
      if (!hit[j]) return {std::nullopt, "span map misses " + t.to().apex()[j].str()};
  }
  std::vector<std::optional<typename B::Obj2>> slots(t.to().apex().size());
  for (std::size_t c = 0; c < t.components().size(); ++c) {
    auto ci = bk.inverse2(t.component(c));
    if (!ci.inverse)
      return {std::nullopt, "component at " + t.from().apex()[c].str() + " is not invertible (" + ci.witness + ")"};
    slots[t.map()(c)] = std::move(ci.inverse);
  }
  std::vector<typename B::Obj2> comps;
  for (auto& s : slots) comps.push_back(std::move(*s));
  return {Cell2<B>(Unchecked{}, t.to(), t.from(), *inv, std::move(comps)), ""};
}

template <Backend B>
Cell2<B> inverse2(const B& bk, const Cell2<B>& t) {
  auto r = invert2(bk, t);
  if (!r.inverse) throw std::domain_error("2-cell is not invertible: " + r.witness);
  return *r.inverse;
}

// (b⊗b2)∘(a⊗a2) ⇒ (b∘a)⊗(b2∘a2): ((d,d2),(c,c2)) ↦ ((d,c),(d2,c2)).
template <Backend B>
Cell2<B> interchange2(const B& bk, const Cell1<B>& b, const Cell1<B>& b2, const Cell1<B>& a, const Cell1<B>& a2) {
  Cell1<B> from = hcomp1(bk, tensor1(bk, b, b2), tensor1(bk, a, a2));
  Cell1<B> to = tensor1(bk, hcomp1(bk, b, a), hcomp1(bk, b2, a2));
  std::vector<typename B::Obj2> comps;
  std::vector<std::size_t> map;
  for (Atom e : from.apex().elements()) {
    Atom dd = e.first(), cc = e.second();
    std::size_t d = b.apex().index_of(dd.first()), d2 = b2.apex().index_of(dd.second());
    std::size_t c = a.apex().index_of(cc.first()), c2 = a2.apex().index_of(cc.second());
    map.push_back(to.apex().index_of(Atom::pair(Atom::pair(dd.first(), cc.first()), Atom::pair(dd.second(), cc.second()))));
    comps.push_back(bk.interchange(b.label(d), b2.label(d2), a.label(c), a2.label(c2)));
  }
  FinFn m(from.apex(), to.apex(), std::move(map));
  return Cell2<B>(bk, std::move(from), std::move(to), std::move(m), std::move(comps));
}

// ---- equality ----

template <Backend B>
struct Equality {
  bool equal = true;
  std::string witness;
  explicit operator bool() const { return equal; }
};

// Every apex element at which u and v differ.
template <Backend B>
std::vector<std::string> differences2(const B& bk, const Cell2<B>& u, const Cell2<B>& v) {
  std::vector<std::string> out;
  if (auto d = cell1_difference(bk, u.from(), v.from())) return {"sources differ: " + *d};
  if (auto d = cell1_difference(bk, u.to(), v.to())) return {"targets differ: " + *d};
  for (std::size_t c = 0; c < u.components().size(); ++c) {
    const std::string at = u.from().apex()[c].str();
    if (u.map()(c) != v.map()(c))
      out.push_back("at " + at + ": span maps send it to " + u.to().apex()[u.map()(c)].str() + " vs " +
                    v.to().apex()[v.map()(c)].str());
    else if (auto d = bk.diff2(u.component(c), v.component(c)))
      out.push_back("at " + at + ": " + *d);
  }
  return out;
}

template <Backend B>
Equality<B> eq2(const B& bk, const Cell2<B>& u, const Cell2<B>& v) {
  auto d = differences2(bk, u, v);
  if (d.empty()) return {};
  return {false, d.front()};
}

// Compares u with v followed by the given coherence cells (in order).
template <Backend B>
Equality<B> eq2(const B& bk, const Cell2<B>& u, const Cell2<B>& v, const std::vector<Cell2<B>>& transport) {
  Cell2<B> w = v;
  for (const auto& t : transport) {
    if (!invert2(bk, t)) throw std::invalid_argument("transport cell is not invertible");
    w = vcomp2(bk, t, w);
  }
  return eq2(bk, u, w);
}

// The span map from -> to preserving both legs, with identity components.
// Defined when each apex element of `from` has exactly one partner in `to`
// with the same legs and an equal label; between jointly monic spans this
// is the unique structural isomorphism of Span.
template <Backend B>
Cell2<B> structural2(const B& bk, const Cell1<B>& from, const Cell1<B>& to) {
  if (auto d = cell0_difference(bk, from.src(), to.src())) throw BoundaryError("structural 2-cell sources: " + *d);
  if (auto d = cell0_difference(bk, from.tgt(), to.tgt())) throw BoundaryError("structural 2-cell targets: " + *d);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_legs;
  for (std::size_t e = 0; e < to.apex().size(); ++e) by_legs[{to.span().left()(e), to.span().right()(e)}].push_back(e);
  std::vector<std::size_t> map;
  std::vector<typename B::Obj2> comps;
  for (std::size_t c = 0; c < from.apex().size(); ++c) {
    auto it = by_legs.find({from.span().left()(c), from.span().right()(c)});
    if (it == by_legs.end()) throw BoundaryError("no target element has the legs of " + from.apex()[c].str());
    if (it->second.size() > 1)
      throw BoundaryError("target is not jointly monic over the legs of " + from.apex()[c].str());
    std::size_t e = it->second.front();
    if (!bk.eq1(from.label(c), to.label(e)))
      throw BoundaryError("labels differ at " + from.apex()[c].str() + " and " + to.apex()[e].str());
    map.push_back(e);
    comps.push_back(bk.id2(from.label(c)));
  }
  return Cell2<B>(bk, from, to, FinFn(from.apex(), to.apex(), std::move(map)), std::move(comps));
}

// Inverse of a cell built from identity components over a bijective span
// map (associators, unitors, joins); no component is inverted.
template <Backend B>
Cell2<B> structural_inverse(const B& bk, const Cell2<B>& t) {
  auto inv = t.map().inverse();
  if (!inv) throw std::domain_error("structural 2-cell has a non-bijective span map");
  std::vector<typename B::Obj2> comps;
  for (std::size_t e = 0; e < t.to().apex().size(); ++e) comps.push_back(bk.id2(t.to().label(e)));
  return Cell2<B>(Unchecked{}, t.to(), t.from(), *inv, std::move(comps));
}

// ---- paths of composable 1-cells ----

// cells[0] ∘ cells[1] ∘ ... ∘ cells[n-1]; evaluated right-nested.
template <Backend B>
struct Path {
  Cell0<B> src, tgt;
  std::vector<Cell1<B>> cells;
};

template <Backend B>
Path<B> make_path(const B& bk, std::vector<Cell1<B>> cells) {
  if (cells.empty()) throw std::invalid_argument("a path needs at least one cell to know its endpoints");
  for (std::size_t i = 0; i + 1 < cells.size(); ++i)
    if (auto d = cell0_difference(bk, cells[i].src(), cells[i + 1].tgt()))
      throw BoundaryError("path position " + std::to_string(i) + ": " + *d);
  return {cells.back().src(), cells.front().tgt(), std::move(cells)};
}

template <Backend B>
Cell1<B> eval(const B& bk, const Path<B>& p) {
  if (p.cells.empty()) return identity1(bk, p.src);
  Cell1<B> acc = p.cells.back();
  for (std::size_t i = p.cells.size() - 1; i-- > 0;) acc = hcomp1(bk, p.cells[i], acc);
  return acc;
}

template <Backend B>
Path<B> subpath(const Path<B>& p, std::size_t pos, std::size_t len) {
  const std::size_t n = p.cells.size();
  Path<B> out;
  out.tgt = pos == 0 ? p.tgt : p.cells[pos - 1].src();
  out.src = pos + len == n ? p.src : p.cells[pos + len].tgt();
  out.cells.assign(p.cells.begin() + pos, p.cells.begin() + pos + len);
  return out;
}

template <Backend B>
Path<B> concat(const Path<B>& p, const Path<B>& q) {
  Path<B> out{q.src, p.tgt, p.cells};
  out.cells.insert(out.cells.end(), q.cells.begin(), q.cells.end());
  return out;
}

// Canonical iso eval(p) ∘ eval(q) ⇒ eval(p ++ q).
template <Backend B>
Cell2<B> join(const B& bk, const Path<B>& p, const Path<B>& q) {
  Cell1<B> ep = eval(bk, p), eq = eval(bk, q);
  if (p.cells.empty()) return left_unitor2(bk, eq);
  if (q.cells.empty()) return right_unitor2(bk, ep);
  if (p.cells.size() == 1) return identity2(bk, hcomp1(bk, ep, eq));
  Path<B> rest = subpath(p, 1, p.cells.size() - 1);
  Cell2<B> alpha = associator2(bk, p.cells.front(), eval(bk, rest), eq);
  Cell2<B> inner = join(bk, rest, q);
  return vcomp2(bk, hcomp2(bk, identity2(bk, p.cells.front()), inner), alpha);
}

// Given θ: eval(sub) ⇒ eval(repl) where sub = cells[pos, pos+len), the
// whiskered and re-bracketed 2-cell eval(p) ⇒ eval(p with sub replaced).
template <Backend B>
Cell2<B> rewrite(const B& bk, const Path<B>& p, std::size_t pos, std::size_t len, const Cell2<B>& theta,
                 const Path<B>& repl) {
  const std::size_t n = p.cells.size();
  if (pos + len > n) throw std::out_of_range("rewrite window exceeds the path");
  Path<B> prefix = subpath(p, 0, pos);
  Path<B> sub = subpath(p, pos, len);
  Path<B> suffix = subpath(p, pos + len, n - pos - len);
  Path<B> tail = concat(sub, suffix);
  Path<B> new_tail = concat(repl, suffix);

  std::vector<Cell2<B>> steps;
  // eval(p) ⇒ eval(prefix) ∘ eval(sub ++ suffix) ⇒ eval(prefix) ∘ (eval(sub) ∘ eval(suffix))
  steps.push_back(structural_inverse(bk, join(bk, prefix, tail)));
  steps.push_back(hcomp2(bk, identity2(bk, eval(bk, prefix)), structural_inverse(bk, join(bk, sub, suffix))));
  steps.push_back(hcomp2(bk, identity2(bk, eval(bk, prefix)), hcomp2(bk, theta, identity2(bk, eval(bk, suffix)))));
  steps.push_back(hcomp2(bk, identity2(bk, eval(bk, prefix)), join(bk, repl, suffix)));
  steps.push_back(join(bk, prefix, new_tail));
  return chain(bk, steps);
}

template <Backend B>
Path<B> replace(const Path<B>& p, std::size_t pos, std::size_t len, const Path<B>& repl) {
  Path<B> out{p.src, p.tgt, {}};
  out.cells.assign(p.cells.begin(), p.cells.begin() + pos);
  out.cells.insert(out.cells.end(), repl.cells.begin(), repl.cells.end());
  out.cells.insert(out.cells.end(), p.cells.begin() + pos + len, p.cells.end());
  return out;
}

// ---- lax functors between backends and Span|F ----

template <Backend S, Backend T>
struct LaxFunctor {
  std::function<typename T::Obj0(const typename S::Obj0&)> on0;
  std::function<typename T::Obj1(const typename S::Obj1&)> on1;
  std::function<typename T::Obj2(const typename S::Obj2&)> on2;
  // F b ∘ F a ⇒ F(b∘a)
  std::function<typename T::Obj2(const typename S::Obj1&, const typename S::Obj1&)> comparison;
  // 1_{F x} ⇒ F(1_x)
  std::function<typename T::Obj2(const typename S::Obj0&)> unit;
};

template <Backend S, Backend T>
Cell0<T> apply_span_F(const LaxFunctor<S, T>& F, const Cell0<S>& x) {
  Cell0<T> out{x.carrier, {}};
  for (const auto& l : x.label) out.label.push_back(F.on0(l));
  return out;
}

template <Backend S, Backend T>
Cell1<T> apply_span_F(const T& tk, const LaxFunctor<S, T>& F, const Cell1<S>& a) {
  std::vector<typename T::Obj1> labels;
  for (const auto& l : a.labels()) labels.push_back(F.on1(l));
  return Cell1<T>(tk, apply_span_F(F, a.src()), apply_span_F(F, a.tgt()), a.span(), std::move(labels));
}

template <Backend S, Backend T>
Cell2<T> apply_span_F(const T& tk, const LaxFunctor<S, T>& F, const Cell2<S>& f) {
  std::vector<typename T::Obj2> comps;
  for (const auto& c : f.components()) comps.push_back(F.on2(c));
  return Cell2<T>(tk, apply_span_F(tk, F, f.from()), apply_span_F(tk, F, f.to()), f.map(), std::move(comps));
}

// Span|F(b) ∘ Span|F(a) ⇒ Span|F(b∘a): identity span map, components from F.
template <Backend S, Backend T>
Cell2<T> span_comparison(const S& sk, const T& tk, const LaxFunctor<S, T>& F, const Cell1<S>& b, const Cell1<S>& a) {
  Cell1<T> from = hcomp1(tk, apply_span_F(tk, F, b), apply_span_F(tk, F, a));
  Cell1<T> to = apply_span_F(tk, F, hcomp1(sk, b, a));
  std::vector<typename T::Obj2> comps;
  for (auto [d, c] : pullback_indices(b.span(), a.span())) comps.push_back(F.comparison(b.label(d), a.label(c)));
  return Cell2<T>(tk, std::move(from), std::move(to), FinFn::identity(to.apex()), std::move(comps));
}

template <Backend S, Backend T>
Cell2<T> span_unit(const S& sk, const T& tk, const LaxFunctor<S, T>& F, const Cell0<S>& x) {
  Cell1<T> from = identity1(tk, apply_span_F(F, x));
  Cell1<T> to = apply_span_F(tk, F, identity1(sk, x));
  std::vector<typename T::Obj2> comps;
  for (const auto& l : x.label) comps.push_back(F.unit(l));
  return Cell2<T>(tk, std::move(from), std::move(to), FinFn::identity(to.apex()), std::move(comps));
}

using VCell0 = Cell0<VectBackend>;
using VCell1 = Cell1<VectBackend>;
using VCell2 = Cell2<VectBackend>;
using VPath = Path<VectBackend>;

}  // namespace spanv
