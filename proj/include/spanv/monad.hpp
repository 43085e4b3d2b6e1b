#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanv/cells.hpp"
#include "spanv/parallel.hpp"
#include "spanv/report.hpp"
#include "spanv/walk.hpp"

namespace spanv {

// A monad in Span|B on (D⁰, f): the span D⁰ ←t D¹ →s D⁰ labeled by F, with
// μ_{h,k}: F(h)∘F(k) → F(h·k) for composable h, k and η_x: 1 → F(e_x).
// Equivalently a lax functor from the shape into B.
template <Backend B>
struct MonadPresentation {
  FinCategoryPtr shape;
  std::vector<typename B::Obj0> base;  // per object
  std::vector<typename B::Obj1> F;     // per morphism
  std::map<std::pair<std::size_t, std::size_t>, typename B::Obj2> mu;
  std::vector<typename B::Obj2> eta;  // per object
};

template <Backend B>
struct MonadCells {
  Cell0<B> base;
  Cell1<B> F;
  Cell2<B> mu;   // F∘F ⇒ F, (h,k) ↦ h·k
  Cell2<B> eta;  // 1 ⇒ F, x ↦ e_x
};

namespace detail {

inline std::string show_pair(const FinCategory& d, std::size_t h, std::size_t k) {
  return "(" + d.morphism_set()[h].str() + "," + d.morphism_set()[k].str() + ")";
}

inline std::string show_triple(const FinCategory& d, std::size_t h, std::size_t k, std::size_t l) {
  return "(" + d.morphism_set()[h].str() + "," + d.morphism_set()[k].str() + "," + d.morphism_set()[l].str() + ")";
}

template <Backend B>
const typename B::Obj2& mu_at(const MonadPresentation<B>& p, std::size_t h, std::size_t k) {
  auto it = p.mu.find({h, k});
  if (it == p.mu.end()) throw BoundaryError("no multiplication given at " + show_pair(*p.shape, h, k));
  return it->second;
}

// Composable pairs (h,k), s h = t k, in lexicographic order.
inline std::vector<std::pair<std::size_t, std::size_t>> composable_pairs(const FinCategory& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t h = 0; h < d.num_morphisms(); ++h)
    for (std::size_t k = 0; k < d.num_morphisms(); ++k)
      if (d.src(h) == d.tgt(k)) out.emplace_back(h, k);
  return out;
}

}  // namespace detail

template <Backend B>
MonadCells<B> monad_cells(const B& bk, const MonadPresentation<B>& p) {
  const FinCategory& d = *p.shape;
  if (p.base.size() != d.num_objects()) throw BoundaryError("need one base label per object of the shape");
  if (p.F.size() != d.num_morphisms()) throw BoundaryError("need one 1-cell per morphism of the shape");
  if (p.eta.size() != d.num_objects()) throw BoundaryError("need one unit per object of the shape");
  Cell0<B> base{d.object_set(), p.base};
  Cell1<B> F(bk, base, base, Span(d.tgt_fn(), d.src_fn()), p.F);
  Cell1<B> FF = hcomp1(bk, F, F);
  std::vector<std::size_t> map;
  std::vector<typename B::Obj2> comps;
  for (auto [h, k] : pullback_indices(F.span(), F.span())) {
    map.push_back(d.comp(h, k));
    comps.push_back(detail::mu_at(p, h, k));
  }
  Cell2<B> mu(bk, FF, F, FinFn(FF.apex(), F.apex(), std::move(map)), std::move(comps));
  Cell1<B> one = identity1(bk, base);
  std::vector<std::size_t> units;
  for (std::size_t x = 0; x < d.num_objects(); ++x) units.push_back(d.id(x));
  Cell2<B> eta(bk, one, F, FinFn(one.apex(), F.apex(), std::move(units)), p.eta);
  return {std::move(base), std::move(F), std::move(mu), std::move(eta)};
}

// Boundaries, then associativity of μ on every composable triple and both
// unit laws on every morphism. Instances are independent and may run in
// parallel; witnesses come back in instance order.
template <Backend B>
Report check_monad(const B& bk, const MonadPresentation<B>& p) {
  Report r("monad");
  const FinCategory& d = *p.shape;
  try {
    monad_cells(bk, p);
  } catch (const std::exception& e) {
    r.fail("boundary", e.what());
    return r;
  }
  auto F = [&](std::size_t h) -> const typename B::Obj1& { return p.F[h]; };
  auto mu = [&](std::size_t h, std::size_t k) -> const typename B::Obj2& { return detail::mu_at(p, h, k); };

  std::vector<std::array<std::size_t, 3>> triples;
  for (auto [h, k] : detail::composable_pairs(d))
    for (std::size_t l = 0; l < d.num_morphisms(); ++l)
      if (d.src(k) == d.tgt(l)) triples.push_back({h, k, l});
  auto assoc = parallel_map(triples.size(), [&](std::size_t i) -> std::optional<Witness> {
    auto [h, k, l] = triples[i];
    auto lhs = bk.vcomp2(mu(d.comp(h, k), l), bk.hcomp2(mu(h, k), bk.id2(F(l))));
    auto rhs = bk.vcomp2(mu(h, d.comp(k, l)), bk.hcomp2(bk.id2(F(h)), mu(k, l)));
    if (auto diff = bk.diff2(lhs, rhs)) return Witness{"associativity at " + detail::show_triple(d, h, k, l), *diff};
    return std::nullopt;
  });
  auto units = parallel_map(d.num_morphisms(), [&](std::size_t h) -> std::vector<Witness> {
    std::vector<Witness> out;
    const std::string at = d.morphism_set()[h].str();
    const std::size_t et = d.id(d.tgt(h)), es = d.id(d.src(h));
    auto left = bk.vcomp2(mu(et, h), bk.hcomp2(p.eta[d.tgt(h)], bk.id2(F(h))));
    if (auto diff = bk.diff2(left, bk.id2(F(h)))) out.push_back({"left unit at " + at, *diff});
    auto right = bk.vcomp2(mu(h, es), bk.hcomp2(bk.id2(F(h)), p.eta[d.src(h)]));
    if (auto diff = bk.diff2(right, bk.id2(F(h)))) out.push_back({"right unit at " + at, *diff});
    return out;
  });
  r.count(triples.size() + 2 * d.num_morphisms());
  for (auto& w : assoc)
    if (w) r.fail(w->where, w->what);
  for (auto& ws : units)
    for (auto& w : ws) r.fail(w.where, w.what);
  return r;
}

// The monoidale and opmonoidal data needed for fusion:
//   f2: F∘m ⇒ m∘(F⊗F)     f0: F∘u ⇒ u
template <Backend B>
struct OpmonoidalCells {
  Cell1<B> m, u;
  Cell2<B> f2, f0;
};

// Left fusion F∘m∘(F⊗1) ⇒ m∘(F⊗F): f₂ whiskered by F⊗1, the interchanger
// (F⊗F)∘(F⊗1) ⇒ (F∘F)⊗(F∘1), then μ⊗ρ.
template <Backend B>
Cell2<B> left_fusion(const B& bk, const MonadCells<B>& t, const OpmonoidalCells<B>& op) {
  Cell1<B> id = identity1(bk, t.base);
  Cell1<B> FF = tensor1(bk, t.F, t.F);
  Walk<B> w(bk, {t.F, op.m, tensor1(bk, t.F, id)});
  w.apply(0, 2, op.f2, {op.m, FF})
      .apply(1, 2, interchange2(bk, t.F, t.F, t.F, id), {tensor1(bk, hcomp1(bk, t.F, t.F), hcomp1(bk, t.F, id))})
      .apply(1, 1, tensor2(bk, t.mu, right_unitor2(bk, t.F)), {FF});
  return w.cell();
}

// Right fusion F∘m∘(1⊗F) ⇒ m∘(F⊗F), the mirror image with μ on the
// second factor.
template <Backend B>
Cell2<B> right_fusion(const B& bk, const MonadCells<B>& t, const OpmonoidalCells<B>& op) {
  Cell1<B> id = identity1(bk, t.base);
  Cell1<B> FF = tensor1(bk, t.F, t.F);
  Walk<B> w(bk, {t.F, op.m, tensor1(bk, id, t.F)});
  w.apply(0, 2, op.f2, {op.m, FF})
      .apply(1, 2, interchange2(bk, t.F, t.F, id, t.F), {tensor1(bk, hcomp1(bk, t.F, id), hcomp1(bk, t.F, t.F))})
      .apply(1, 1, tensor2(bk, right_unitor2(bk, t.F), t.mu), {FF});
  return w.cell();
}

struct HopfVerdict {
  bool hopf = true;
  std::string witness;
  explicit operator bool() const { return hopf; }
};

// Hopf iff both fusion cells are invertible.
template <Backend B>
HopfVerdict fusion_verdict(const B& bk, const Cell2<B>& left, const Cell2<B>& right) {
  if (auto inv = invert2(bk, left); !inv) return {false, "left fusion: " + inv.witness};
  if (auto inv = invert2(bk, right); !inv) return {false, "right fusion: " + inv.witness};
  return {};
}

}  // namespace spanv
