#include "spanv/finset.hpp"

#include <unordered_map>

namespace spanv {

FinSet::FinSet() : impl_(std::make_shared<const Impl>()) {}

FinSet::FinSet(std::vector<Atom> elements) {
  auto impl = std::make_shared<Impl>();
  impl->index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!impl->index.emplace(elements[i], i).second)
      throw std::invalid_argument("duplicate atom " + elements[i].str() + " in finite set");
  }
  impl->elements = std::move(elements);
  impl_ = std::move(impl);
}

FinSet FinSet::singleton() { return FinSet({Atom()}); }

FinSet FinSet::range(std::size_t n) {
  std::vector<Atom> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Atom::of(static_cast<std::int64_t>(i)));
  return FinSet(std::move(v));
}

std::optional<std::size_t> FinSet::find(Atom a) const {
  auto it = impl_->index.find(a);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinSet::index_of(Atom a) const {
  if (auto i = find(a)) return *i;
  throw std::out_of_range("atom " + a.str() + " not in " + str());
}

std::string FinSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += (*this)[i].str();
  }
  return out + "}";
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.impl_ == b.impl_ || a.impl_->elements == b.impl_->elements;
}

FinSet product(const FinSet& a, const FinSet& b) {
  std::vector<Atom> v;
  v.reserve(a.size() * b.size());
  for (Atom x : a.elements())
    for (Atom y : b.elements()) v.push_back(Atom::pair(x, y));
  return FinSet(std::move(v));
}

std::string describe_boundary(const FinSet& expected, const FinSet& actual) {
  return "expected " + expected.str() + ", got " + actual.str();
}

FinFn::FinFn(FinSet domain, FinSet codomain, std::vector<std::size_t> assignment)
    : dom_(std::move(domain)), cod_(std::move(codomain)), map_(std::move(assignment)) {
  if (map_.size() != dom_.size())
    throw std::invalid_argument("function assigns " + std::to_string(map_.size()) + " values on a domain of size " +
                                std::to_string(dom_.size()));
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] >= cod_.size())
      throw std::invalid_argument("value of " + dom_[i].str() + " lies outside codomain " + cod_.str());
}

FinFn FinFn::identity(const FinSet& x) {
  std::vector<std::size_t> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return FinFn(x, x, std::move(v));
}

FinFn FinFn::diagonal(const FinSet& x) {
  std::vector<std::size_t> v(x.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i * x.size() + i;
  return FinFn(x, product(x, x), std::move(v));
}

FinFn FinFn::terminal(const FinSet& x) { return FinFn(x, FinSet::singleton(), std::vector<std::size_t>(x.size(), 0)); }

FinFn FinFn::first_projection(const FinSet& a, const FinSet& b) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v.push_back(i);
  return FinFn(product(a, b), a, std::move(v));
}

FinFn FinFn::second_projection(const FinSet& a, const FinSet& b) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v.push_back(j);
  return FinFn(product(a, b), b, std::move(v));
}

bool FinFn::is_injective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (std::size_t v : map_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool FinFn::is_surjective() const {
  std::vector<bool> hit(cod_.size(), false);
  for (std::size_t v : map_) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

std::optional<FinFn> FinFn::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<std::size_t> v(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) v[map_[i]] = i;
  return FinFn(cod_, dom_, std::move(v));
}

bool operator==(const FinFn& f, const FinFn& g) {
  return f.map_ == g.map_ && f.dom_ == g.dom_ && f.cod_ == g.cod_;
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (!(g.domain() == f.codomain()))
    throw BoundaryError("function composition: " + describe_boundary(f.codomain(), g.domain()));
  std::vector<std::size_t> v(f.domain().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(f(i));
  return FinFn(f.domain(), g.codomain(), std::move(v));
}

FinFn product_fn(const FinFn& f, const FinFn& g) {
  std::vector<std::size_t> v;
  const std::size_t n = g.codomain().size();
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    for (std::size_t j = 0; j < g.domain().size(); ++j) v.push_back(f(i) * n + g(j));
  return FinFn(product(f.domain(), g.domain()), product(f.codomain(), g.codomain()), std::move(v));
}

FinFn pair_fn(const FinFn& f, const FinFn& g) {
  if (!(f.domain() == g.domain())) throw BoundaryError("pairing: " + describe_boundary(f.domain(), g.domain()));
  std::vector<std::size_t> v(f.domain().size());
  const std::size_t n = g.codomain().size();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(i) * n + g(i);
  return FinFn(f.domain(), product(f.codomain(), g.codomain()), std::move(v));
}

Span::Span(FinFn left, FinFn right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.domain() == right_.domain()))
    throw std::invalid_argument("span legs have different domains: " +
                                describe_boundary(left_.domain(), right_.domain()));
}

Span Span::identity(const FinSet& x) { return Span(FinFn::identity(x), FinFn::identity(x)); }

SpanMorphism::SpanMorphism(Span from, Span to, FinFn map)
    : from_(std::move(from)), to_(std::move(to)), map_(std::move(map)) {
  if (!(map_.domain() == from_.apex()) || !(map_.codomain() == to_.apex()))
    throw BoundaryError("span morphism map must go from " + from_.apex().str() + " to " + to_.apex().str());
  if (!(from_.src() == to_.src()) || !(from_.tgt() == to_.tgt()))
    throw BoundaryError("span morphism between spans with different boundaries");
  for (std::size_t c = 0; c < map_.domain().size(); ++c) {
    if (to_.left()(map_(c)) != from_.left()(c) || to_.right()(map_(c)) != from_.right()(c))
      throw BoundaryError("span morphism legs do not commute at " + from_.apex()[c].str());
  }
}

SpanMorphism SpanMorphism::identity(const Span& s) { return SpanMorphism(s, s, FinFn::identity(s.apex())); }

std::vector<std::pair<std::size_t, std::size_t>> pullback_indices(const Span& b, const Span& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t d = 0; d < b.apex().size(); ++d)
    for (std::size_t c = 0; c < a.apex().size(); ++c)
      if (b.right()(d) == a.left()(c)) out.emplace_back(d, c);
  return out;
}

Span compose_spans(const Span& b, const Span& a) {
  if (!(b.src() == a.tgt())) throw BoundaryError("span composition: " + describe_boundary(b.src(), a.tgt()));
  auto pairs = pullback_indices(b, a);
  std::vector<Atom> apex;
  std::vector<std::size_t> left, right;
  for (auto [d, c] : pairs) {
    apex.push_back(Atom::pair(b.apex()[d], a.apex()[c]));
    left.push_back(b.left()(d));
    right.push_back(a.right()(c));
  }
  FinSet ap(std::move(apex));
  return Span(FinFn(ap, b.tgt(), std::move(left)), FinFn(ap, a.src(), std::move(right)));
}

SpanMorphism compose_span_morphisms_h(const SpanMorphism& g, const SpanMorphism& f) {
  Span from = compose_spans(g.from(), f.from());
  Span to = compose_spans(g.to(), f.to());
  std::vector<std::size_t> v;
  v.reserve(from.apex().size());
  for (Atom e : from.apex().elements()) {
    Atom image = Atom::pair(g.map()(e.first()), f.map()(e.second()));
    v.push_back(to.apex().index_of(image));
  }
  FinFn map(from.apex(), to.apex(), std::move(v));
  return SpanMorphism(std::move(from), std::move(to), std::move(map));
}

SpanMorphism compose_span_morphisms_v(const SpanMorphism& second, const SpanMorphism& first) {
  if (!(first.to() == second.from())) throw BoundaryError("vertical composition of span morphisms: spans differ");
  return SpanMorphism(first.from(), second.to(), compose(second.map(), first.map()));
}

Span cartesian_product(const Span& a, const Span& b) {
  return Span(product_fn(a.left(), b.left()), product_fn(a.right(), b.right()));
}

SpanMorphism cartesian_product(const SpanMorphism& f, const SpanMorphism& g) {
  return SpanMorphism(cartesian_product(f.from(), g.from()), cartesian_product(f.to(), g.to()),
                      product_fn(f.map(), g.map()));
}

SpanMorphism associator_iso(const Span& c, const Span& b, const Span& a) {
  Span from = compose_spans(compose_spans(c, b), a);
  Span to = compose_spans(c, compose_spans(b, a));
  return SpanMorphism(from, to, FinFn::from_atoms(from.apex(), to.apex(), [](Atom x) {
                        Atom ed = x.first();
                        return Atom::pair(ed.first(), Atom::pair(ed.second(), x.second()));
                      }));
}

SpanMorphism left_unitor_iso(const Span& a) {
  Span from = compose_spans(Span::identity(a.tgt()), a);
  return SpanMorphism(from, a, FinFn::from_atoms(from.apex(), a.apex(), [](Atom x) { return x.second(); }));
}

SpanMorphism right_unitor_iso(const Span& a) {
  Span from = compose_spans(a, Span::identity(a.src()));
  return SpanMorphism(from, a, FinFn::from_atoms(from.apex(), a.apex(), [](Atom x) { return x.first(); }));
}

std::optional<SpanMorphism> invert(const SpanMorphism& f) {
  auto inv = f.map().inverse();
  if (!inv) return std::nullopt;
  return SpanMorphism(f.to(), f.from(), *inv);
}

AdjointResult right_adjoint_of(const Span& a) {
  const FinFn& r = a.right();
  std::vector<std::size_t> preimage(r.codomain().size(), a.apex().size());
  for (std::size_t c = 0; c < a.apex().size(); ++c) {
    if (preimage[r(c)] != a.apex().size())
      return {std::nullopt, "right leg identifies apex elements " + a.apex()[preimage[r(c)]].str() + " and " +
                                a.apex()[c].str()};
    preimage[r(c)] = c;
  }
  for (std::size_t x = 0; x < preimage.size(); ++x)
    if (preimage[x] == a.apex().size())
      return {std::nullopt, "source element " + a.src()[x].str() + " is not in the image of the right leg"};

  Span adj(a.right(), a.left());
  Span aa = compose_spans(adj, a);  // apex pairs (d,c) with l(d) = l(c)
  Span id_x = Span::identity(a.src());
  std::vector<std::size_t> unit_map(a.src().size());
  for (std::size_t x = 0; x < unit_map.size(); ++x)
    unit_map[x] = aa.apex().index_of(Atom::pair(a.apex()[preimage[x]], a.apex()[preimage[x]]));
  SpanMorphism unit(id_x, aa, FinFn(id_x.apex(), aa.apex(), std::move(unit_map)));

  Span a_adj = compose_spans(a, adj);  // apex pairs (c,d) with r(c) = r(d), so c = d
  Span id_y = Span::identity(a.tgt());
  SpanMorphism counit(a_adj, id_y, FinFn::from_atoms(a_adj.apex(), id_y.apex(), [&](Atom x) {
                        return a.left()(x.first());
                      }));
  return {RightAdjoint{adj, unit, counit}, ""};
}

}  // namespace spanv
