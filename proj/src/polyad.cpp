#include "spanv/polyad.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "spanv/functoriality.hpp"

namespace spanv {

namespace {

const CatBackend cat;

std::string show(const FinCategory& d, std::size_t h) { return d.morphism_set()[h].str(); }

Handle star() { return Handle::index(0); }

// Index set of a module-like family: W_i ∈ C_{leg i}, actions d(h)W_i → W_{act(h,i)}.
struct Indexing {
  FinSet set;
  std::vector<std::size_t> leg;
  std::function<std::size_t(std::size_t, std::size_t)> act;
};

Indexing module_indexing(const FinCategory& d) {
  std::vector<std::size_t> leg;
  for (std::size_t x = 0; x < d.num_objects(); ++x) leg.push_back(x);
  return {d.object_set(), leg, [&d](std::size_t h, std::size_t) { return d.tgt(h); }};
}

Indexing representation_indexing(const FinCategory& d) {
  return {d.morphism_set(), d.tables().tgt, [&d](std::size_t g, std::size_t k) { return d.comp(g, k); }};
}

std::vector<std::pair<std::size_t, std::size_t>> action_pairs(const FinCategory& d, const Indexing& ix) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t h = 0; h < d.num_morphisms(); ++h)
    for (std::size_t i = 0; i < ix.leg.size(); ++i)
      if (d.src(h) == ix.leg[i]) out.emplace_back(h, i);
  return out;
}

void require_finite(const PolyadPresentation& d) {
  for (const auto& c : d.base)
    if (!c->finite()) throw std::invalid_argument("enumeration needs finite categories, " + c->name() + " is sampled");
}

// Every assignment of objects W_i ∈ C_{leg i}, in odometer order (last index fastest).
template <class F>
void for_each_family(const std::vector<std::vector<Handle>>& choices, F&& f) {
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> at(choices.size(), 0);
  std::vector<Handle> cur(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) cur[i] = choices[i][at[i]];
    f(cur);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++at[i] < choices[i].size()) break;
      at[i] = 0;
      if (i == 0) return;
    }
    if (choices.empty()) return;
  }
}

class Search {
 public:
  Search(const PolyadPresentation& d, Indexing ix) : d_(d), D_(*d.shape), ix_(std::move(ix)) {
    require_finite(d);
    pairs_ = action_pairs(D_, ix_);
    for (std::size_t j = 0; j < pairs_.size(); ++j) slot_[pairs_[j]] = j;
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  const Category& at(std::size_t i) const { return d_.base[ix_.leg[i]]; }

  std::vector<std::vector<Handle>> object_choices() const {
    std::vector<std::vector<Handle>> out;
    for (std::size_t i = 0; i < ix_.leg.size(); ++i) out.push_back(at(i)->objects());
    return out;
  }

  // hom(d(h)W_i, W_{act(h,i)}) in C_{t h}
  std::vector<Handle> action_choices(const std::vector<Handle>& w, std::size_t j) const {
    auto [h, i] = pairs_[j];
    return d_.base[D_.tgt(h)]->hom(d_.F[h].on_object(w[i]), w[ix_.act(h, i)]);
  }

  std::size_t slot(std::size_t h, std::size_t i) const { return slot_.at({h, i}); }

  // The squares, each attached to the largest action slot it reads.
  struct Axiom {
    std::size_t last;
    std::function<bool(const std::vector<Handle>&, const std::vector<Handle>&)> holds;
  };

  std::vector<Axiom> axioms() const {
    std::vector<Axiom> out;
    for (std::size_t h = 0; h < D_.num_morphisms(); ++h)
      for (std::size_t k = 0; k < D_.num_morphisms(); ++k) {
        if (D_.src(h) != D_.tgt(k)) continue;
        const std::size_t hk = D_.comp(h, k);
        for (std::size_t i = 0; i < ix_.leg.size(); ++i) {
          if (D_.src(k) != ix_.leg[i]) continue;
          std::size_t a = slot(hk, i), b = slot(k, i), c = slot(h, ix_.act(k, i));
          out.push_back({std::max({a, b, c}), [this, h, k, hk, i, a, b, c](const auto& w, const auto& r) {
                           const Category& C = d_.base[D_.tgt(h)];
                           Handle lhs = C->compose(r[a], detail::mu_at(d_, h, k).at(w[i]));
                           Handle rhs = C->compose(r[c], d_.F[h].on_morphism(r[b]));
                           return lhs == rhs;
                         }});
        }
      }
    for (std::size_t i = 0; i < ix_.leg.size(); ++i) {
      const std::size_t x = ix_.leg[i], a = slot(D_.id(x), i);
      out.push_back({a, [this, x, i, a](const auto& w, const auto& r) {
                       const Category& C = d_.base[x];
                       return C->compose(r[a], d_.eta[x].at(w[i])) == C->identity(w[i]);
                     }});
    }
    return out;
  }

  // χ_{act(h,i)}∘ϱ_{h,i} = ϱ'_{h,i}∘d(h)(χ_i)
  bool is_morphism(const PolyadModule& m, const PolyadModule& n, const std::vector<Handle>& chi) const {
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
      auto [h, i] = pairs_[j];
      const Category& C = d_.base[D_.tgt(h)];
      if (!(C->compose(chi[ix_.act(h, i)], m.actions[j]) == C->compose(n.actions[j], d_.F[h].on_morphism(chi[i]))))
        return false;
    }
    return true;
  }

  std::vector<std::vector<Handle>> morphism_choices(const PolyadModule& m, const PolyadModule& n) const {
    std::vector<std::vector<Handle>> out;
    for (std::size_t i = 0; i < ix_.leg.size(); ++i) out.push_back(at(i)->hom(m.objects[i], n.objects[i]));
    return out;
  }

  // Finishes a category from its objects by searching all morphisms.
  ModuleCategory close(std::vector<PolyadModule> objects,
                       const std::function<bool(const PolyadModule&, const PolyadModule&, const std::vector<Handle>&)>&
                           accept,
                       const std::string& prefix) const {
    ModuleCategory out;
    out.pairs = pairs_;
    out.objects = std::move(objects);
    for (std::size_t a = 0; a < out.objects.size(); ++a)
      for (std::size_t b = 0; b < out.objects.size(); ++b)
        for_each_family(morphism_choices(out.objects[a], out.objects[b]), [&](const std::vector<Handle>& chi) {
          if (accept(out.objects[a], out.objects[b], chi)) out.morphisms.push_back({a, b, chi});
        });
    out.category = build_category(out, prefix);
    return out;
  }

 private:
  FinCategoryPtr build_category(const ModuleCategory& m, const std::string& prefix) const {
    CategoryTables t;
    std::vector<Atom> objs, mors;
    for (std::size_t a = 0; a < m.objects.size(); ++a) objs.push_back(Atom::of(prefix + std::to_string(a)));
    std::map<std::tuple<std::size_t, std::size_t, std::vector<Handle>>, std::size_t> index;
    for (std::size_t f = 0; f < m.morphisms.size(); ++f) {
      const auto& mf = m.morphisms[f];
      mors.push_back(Atom::of(prefix + std::to_string(mf.from) + "->" + std::to_string(mf.to) + "#" + std::to_string(f)));
      t.src.push_back(mf.from);
      t.tgt.push_back(mf.to);
      index[{mf.from, mf.to, mf.components}] = f;
    }
    t.objects = FinSet(objs);
    t.morphisms = FinSet(mors);
    for (std::size_t a = 0; a < m.objects.size(); ++a) {
      std::vector<Handle> ids;
      for (std::size_t i = 0; i < ix_.leg.size(); ++i) ids.push_back(at(i)->identity(m.objects[a].objects[i]));
      auto it = index.find({a, a, ids});
      if (it == index.end()) throw std::logic_error("identity of " + objs[a].str() + " was not enumerated");
      t.identities.push_back(it->second);
    }
    for (std::size_t g = 0; g < m.morphisms.size(); ++g)
      for (std::size_t f = 0; f < m.morphisms.size(); ++f) {
        const auto &mg = m.morphisms[g], &mf = m.morphisms[f];
        if (mg.from != mf.to) continue;
        std::vector<Handle> c;
        for (std::size_t i = 0; i < ix_.leg.size(); ++i) c.push_back(at(i)->compose(mg.components[i], mf.components[i]));
        auto it = index.find({mf.from, mg.to, c});
        if (it == index.end()) throw std::logic_error("composite of module morphisms was not enumerated");
        t.composition[{g, f}] = it->second;
      }
    return FinCategory::make(std::move(t), prefix);
  }

  const PolyadPresentation& d_;
  const FinCategory& D_;
  Indexing ix_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_;
};

// Depth-first over action slots, pruning with every square as soon as its
// last slot is filled.
ModuleCategory enumerate(const PolyadPresentation& d, Indexing ix, const std::string& prefix) {
  Search s(d, std::move(ix));
  const std::size_t n = s.pairs().size();
  std::vector<std::vector<Search::Axiom>> by_slot(n);
  for (auto& a : s.axioms()) by_slot[a.last].push_back(std::move(a));

  std::vector<PolyadModule> found;
  for_each_family(s.object_choices(), [&](const std::vector<Handle>& w) {
    std::vector<Handle> r(n);
    std::function<void(std::size_t)> fill = [&](std::size_t j) {
      if (j == n) {
        found.push_back({w, r});
        return;
      }
      for (const Handle& c : s.action_choices(w, j)) {
        r[j] = c;
        bool ok = true;
        for (const auto& ax : by_slot[j])
          if (!(ok = ax.holds(w, r))) break;
        if (ok) fill(j + 1);
      }
    };
    fill(0);
  });
  return s.close(
      std::move(found),
      [&](const PolyadModule& m, const PolyadModule& n2, const std::vector<Handle>& chi) {
        return s.is_morphism(m, n2, chi);
      },
      prefix);
}

// ---- the Eilenberg–Moore side, through 2-cells of Span|Cat ----

class Algebras {
 public:
  Algebras(const PolyadPresentation& d, const Indexing& ix)
      : t_(monad_cells(cat, d)), ix_(ix), leg_(ix.set, t_.base.carrier, ix.leg) {}

  Cell1<CatBackend> carrier(const std::vector<Handle>& w) const {
    std::vector<Functor> labels;
    for (std::size_t i = 0; i < w.size(); ++i) labels.push_back(Functor::constant(t_.base.label[ix_.leg[i]], w[i]));
    return Cell1<CatBackend>(cat, unit_cell0(cat), t_.base, Span(leg_, FinFn::terminal(ix_.set)), std::move(labels));
  }

  // a: F∘Q ⇒ Q, (h,i) ↦ act(h,i) with component ϱ_{h,i}
  Cell2<CatBackend> action(const Cell1<CatBackend>& q, const std::vector<Handle>& r) const {
    Cell1<CatBackend> fq = hcomp1(cat, t_.F, q);
    std::vector<std::size_t> map;
    std::vector<NatTrans> comps;
    std::size_t j = 0;
    for (auto [h, i] : pullback_indices(t_.F.span(), q.span())) {
      std::size_t to = ix_.act(h, i);
      map.push_back(to);
      Handle c = r[j++];
      comps.emplace_back(fq.label(comps.size()), q.label(to), [c](const Handle&) { return c; });
    }
    return Cell2<CatBackend>(cat, fq, q, FinFn(fq.apex(), q.apex(), std::move(map)), std::move(comps));
  }

  bool is_algebra(const std::vector<Handle>& w, const std::vector<Handle>& r) const {
    try {
      Cell1<CatBackend> q = carrier(w);
      Cell2<CatBackend> a = action(q, r);
      Cell2<CatBackend> lhs = chain(cat, {structural_inverse(cat, associator2(cat, t_.F, t_.F, q)),
                                          hcomp2(cat, t_.mu, identity2(cat, q)), a});
      Cell2<CatBackend> rhs = chain(cat, {hcomp2(cat, identity2(cat, t_.F), a), a});
      if (!eq2(cat, lhs, rhs)) return false;
      Cell2<CatBackend> unit =
          chain(cat, {structural_inverse(cat, left_unitor2(cat, q)), hcomp2(cat, t_.eta, identity2(cat, q)), a});
      return static_cast<bool>(eq2(cat, unit, identity2(cat, q)));
    } catch (const BoundaryError&) {
      return false;
    }
  }

  // χ: Q ⇒ Q' over the identity span map with a'∘(1∘χ) = χ∘a
  bool is_morphism(const PolyadModule& m, const PolyadModule& n, const std::vector<Handle>& chi) const {
    Cell1<CatBackend> q = carrier(m.objects), q2 = carrier(n.objects);
    std::vector<NatTrans> comps;
    for (std::size_t i = 0; i < chi.size(); ++i) {
      Handle c = chi[i];
      comps.emplace_back(q.label(i), q2.label(i), [c](const Handle&) { return c; });
    }
    Cell2<CatBackend> x(cat, q, q2, FinFn::identity(q.apex()), std::move(comps));
    Cell2<CatBackend> a = action(q, m.actions), a2 = action(q2, n.actions);
    return static_cast<bool>(eq2(cat, chain(cat, {a, x}), chain(cat, {hcomp2(cat, identity2(cat, t_.F), x), a2})));
  }

 private:
  PolyadCells t_;
  Indexing ix_;
  FinFn leg_;
};

// Plain odometer over every candidate; no pruning, so nothing is shared
// with the direct search except the candidate space.
EMComparison compare(const PolyadPresentation& d, const Indexing& ix, const ModuleCategory& direct,
                     const std::string& name) {
  Search s(d, ix);
  Algebras alg(d, ix);
  std::vector<PolyadModule> found;
  for_each_family(s.object_choices(), [&](const std::vector<Handle>& w) {
    std::vector<std::vector<Handle>> choices;
    for (std::size_t j = 0; j < s.pairs().size(); ++j) choices.push_back(s.action_choices(w, j));
    for_each_family(choices, [&](const std::vector<Handle>& r) {
      if (alg.is_algebra(w, r)) found.push_back({w, r});
    });
  });
  EMComparison out;
  out.algebras = s.close(
      std::move(found),
      [&](const PolyadModule& m, const PolyadModule& n, const std::vector<Handle>& chi) {
        return alg.is_morphism(m, n, chi);
      },
      "A");
  out.report = Report(name);
  Report& r = out.report;
  const ModuleCategory& em = out.algebras;
  r.note("objects", std::to_string(direct.objects.size()) + " / " + std::to_string(em.objects.size()));
  r.note("morphisms", std::to_string(direct.morphisms.size()) + " / " + std::to_string(em.morphisms.size()));
  r.count(2);
  if (direct.objects.size() != em.objects.size()) r.fail("objects", "counts differ");
  if (direct.morphisms.size() != em.morphisms.size()) r.fail("morphisms", "counts differ");

  // Both sides carry the same data, so the comparison functors match by data.
  auto match = [&](const ModuleCategory& from, const ModuleCategory& to) -> std::optional<FunctorData> {
    std::vector<std::size_t> omap, mmap;
    for (std::size_t a = 0; a < from.objects.size(); ++a) {
      std::size_t b = 0;
      while (b < to.objects.size() && !(to.objects[b] == from.objects[a])) ++b;
      if (b == to.objects.size()) {
        r.fail("object " + from.category->object_set()[a].str(), "no counterpart");
        return std::nullopt;
      }
      omap.push_back(b);
    }
    for (std::size_t f = 0; f < from.morphisms.size(); ++f) {
      const auto& mf = from.morphisms[f];
      std::size_t g = 0;
      for (; g < to.morphisms.size(); ++g) {
        const auto& mg = to.morphisms[g];
        if (mg.from == omap[mf.from] && mg.to == omap[mf.to] && mg.components == mf.components) break;
      }
      if (g == to.morphisms.size()) {
        r.fail("morphism " + from.category->morphism_set()[f].str(), "no counterpart");
        return std::nullopt;
      }
      mmap.push_back(g);
    }
    return FunctorData{from.category, to.category,
                       FinFn(from.category->object_set(), to.category->object_set(), std::move(omap)),
                       FinFn(from.category->morphism_set(), to.category->morphism_set(), std::move(mmap))};
  };
  out.to_algebras = match(direct, em);
  out.from_algebras = match(em, direct);
  if (!out.to_algebras || !out.from_algebras) return out;
  r.absorb(check_functor_data(*out.to_algebras));
  r.absorb(check_functor_data(*out.from_algebras));
  const FunctorData &f = *out.to_algebras, &g = *out.from_algebras;
  r.count(2);
  if (!(compose(g.omap, f.omap) == FinFn::identity(direct.category->object_set())) ||
      !(compose(g.mmap, f.mmap) == FinFn::identity(direct.category->morphism_set())))
    r.fail("functor pair", "round trip from the direct side is not the identity");
  if (!(compose(f.omap, g.omap) == FinFn::identity(em.category->object_set())) ||
      !(compose(f.mmap, g.mmap) == FinFn::identity(em.category->morphism_set())))
    r.fail("functor pair", "round trip from the algebra side is not the identity");
  return out;
}

}  // namespace

Report check_polyad(const PolyadPresentation& d) {
  Report r("polyad");
  for (std::size_t h = 0; h < d.F.size(); ++h) {
    Report f = check_functor(d.F[h]);
    if (!f.passed()) r.fail("functor at " + show(*d.shape, h), f.summary());
  }
  for (const auto& [hk, m] : d.mu) r.absorb(check_naturality(m));
  for (const auto& e : d.eta) r.absorb(check_naturality(e));
  r.absorb(check_monad(cat, d));
  return r;
}

Report check_polyad_opmonoidal(const PolyadPresentation& d, const PolyadOpmonoidal& op) {
  Report r("opmonoidal polyad");
  const FinCategory& D = *d.shape;
  const auto& tensor = op.monoidal.tensor;
  const auto& unit = op.monoidal.unit;
  if (tensor.size() != D.num_objects() || unit.size() != D.num_objects() || op.d2.size() != D.num_morphisms() ||
      op.d0.size() != D.num_morphisms()) {
    r.fail("boundary", "need a tensor and unit per object and d2, d0 per morphism");
    return r;
  }
  for (std::size_t x = 0; x < D.num_objects(); ++x) {
    const std::string at = D.object_set()[x].str();
    if (!same_category(tensor[x].dom(), product_category(d.base[x], d.base[x])) ||
        !same_category(tensor[x].cod(), d.base[x]))
      r.fail("tensor at " + at, "expected C×C → C");
    if (!same_category(unit[x].dom(), terminal_category()) || !same_category(unit[x].cod(), d.base[x]))
      r.fail("unit at " + at, "expected 1 → C");
  }
  if (!r.passed()) return r;

  auto boundary = [&](const std::string& where, const NatTrans& n, const Functor& from, const Functor& to) {
    r.count();
    if (auto v = functor_equal(n.from(), from); !v) r.fail(where, "source: " + v.witness);
    if (auto v = functor_equal(n.to(), to); !v) r.fail(where, "target: " + v.witness);
    r.absorb(check_naturality(n));
  };
  for (std::size_t h = 0; h < D.num_morphisms(); ++h) {
    const std::size_t s = D.src(h), t = D.tgt(h);
    const Functor& F = d.F[h];
    try {
      boundary("d2 at " + show(D, h), op.d2[h], compose(F, tensor[s]), compose(tensor[t], product(F, F)));
      boundary("d0 at " + show(D, h), op.d0[h], compose(F, unit[s]), unit[t]);
    } catch (const BoundaryError& e) {
      r.fail("boundary at " + show(D, h), e.what());
    }
  }
  if (!r.passed()) return r;

  // μ_{h,k} and η_x are opmonoidal transformations.
  for (auto [h, k] : detail::composable_pairs(D)) {
    const std::size_t hk = D.comp(h, k);
    const Category& C = d.base[D.tgt(h)];
    const Category& A = d.base[D.src(k)];
    const NatTrans& mu = detail::mu_at(d, h, k);
    const Functor &Fh = d.F[h], &Fk = d.F[k];
    const Functor &th = tensor[D.tgt(h)], &tk = tensor[D.src(k)];
    const std::string at = detail::show_pair(D, h, k);
    for (const Handle& a : A->objects())
      for (const Handle& b : A->objects()) {
        r.count();
        Handle ab = Handle::pair(a, b);
        Handle lhs = C->compose(th.on_morphism(Handle::pair(mu.at(a), mu.at(b))),
                                C->compose(op.d2[h].at(Handle::pair(Fk.on_object(a), Fk.on_object(b))),
                                           Fh.on_morphism(op.d2[k].at(ab))));
        Handle rhs = C->compose(op.d2[hk].at(ab), mu.at(tk.on_object(ab)));
        if (!(lhs == rhs)) r.fail("multiplication and d2 at " + at, "differ at (" + a.str() + "," + b.str() + ")");
      }
    r.count();
    Handle lhs = C->compose(op.d0[hk].at(star()), mu.at(unit[D.src(k)].on_object(star())));
    Handle rhs = C->compose(op.d0[h].at(star()), Fh.on_morphism(op.d0[k].at(star())));
    if (!(lhs == rhs)) r.fail("multiplication and d0 at " + at, lhs.str() + " vs " + rhs.str());
  }
  for (std::size_t x = 0; x < D.num_objects(); ++x) {
    const std::size_t e = D.id(x);
    const Category& C = d.base[x];
    const NatTrans& eta = d.eta[x];
    const std::string at = D.object_set()[x].str();
    for (const Handle& a : C->objects())
      for (const Handle& b : C->objects()) {
        r.count();
        Handle ab = Handle::pair(a, b);
        Handle lhs = C->compose(op.d2[e].at(ab), eta.at(tensor[x].on_object(ab)));
        Handle rhs = tensor[x].on_morphism(Handle::pair(eta.at(a), eta.at(b)));
        if (!(lhs == rhs)) r.fail("unit and d2 at " + at, "differ at (" + a.str() + "," + b.str() + ")");
      }
    r.count();
    Handle u = unit[x].on_object(star());
    if (!(C->compose(op.d0[e].at(star()), eta.at(u)) == C->identity(u))) r.fail("unit and d0 at " + at, "not the identity");
  }
  return r;
}

OpmonoidalCells<CatBackend> polyad_opmonoidal_cells(const PolyadCells& t, const PolyadOpmonoidal& op) {
  const FinSet& D0 = t.base.carrier;
  const FinSet& D1 = t.F.apex();
  if (op.monoidal.tensor.size() != D0.size() || op.monoidal.unit.size() != D0.size() || op.d2.size() != D1.size() ||
      op.d0.size() != D1.size())
    throw BoundaryError("need a tensor and unit per object and d2, d0 per morphism");
  Cell1<CatBackend> m(cat, tensor0(cat, t.base, t.base), t.base, Span(FinFn::identity(D0), FinFn::diagonal(D0)),
                      op.monoidal.tensor);
  Cell1<CatBackend> u(cat, unit_cell0(cat), t.base, Span(FinFn::identity(D0), FinFn::terminal(D0)), op.monoidal.unit);
  auto target = [&](Atom h) { return D0[t.F.span().left()(D1.index_of(h))]; };

  Cell1<CatBackend> Fm = hcomp1(cat, t.F, m);
  Cell1<CatBackend> mFF = hcomp1(cat, m, tensor1(cat, t.F, t.F));
  std::vector<NatTrans> d2;
  for (Atom e : Fm.apex().elements()) d2.push_back(op.d2[D1.index_of(e.first())]);
  Cell2<CatBackend> f2(cat, Fm, mFF,
                       FinFn::from_atoms(Fm.apex(), mFF.apex(),
                                         [&](Atom e) { return Atom::pair(target(e.first()), Atom::pair(e.first(), e.first())); }),
                       std::move(d2));
  Cell1<CatBackend> Fu = hcomp1(cat, t.F, u);
  std::vector<NatTrans> d0;
  for (Atom e : Fu.apex().elements()) d0.push_back(op.d0[D1.index_of(e.first())]);
  Cell2<CatBackend> f0(cat, Fu, u, FinFn::from_atoms(Fu.apex(), u.apex(), [&](Atom e) { return target(e.first()); }),
                       std::move(d0));
  return {std::move(m), std::move(u), std::move(f2), std::move(f0)};
}

PolyadFusion polyad_fusion(const PolyadPresentation& d, const PolyadOpmonoidal& op) {
  PolyadCells t = monad_cells(cat, d);
  OpmonoidalCells<CatBackend> c = polyad_opmonoidal_cells(t, op);
  return {left_fusion(cat, t, c), right_fusion(cat, t, c)};
}

HopfVerdict polyad_is_hopf(const PolyadPresentation& d, const PolyadOpmonoidal& op) {
  if (auto g = is_groupoid(*d.shape); !g) return {false, "shape is not a groupoid: " + g.witness};
  PolyadFusion f = polyad_fusion(d, op);
  return fusion_verdict(cat, f.left, f.right);
}

ModuleCategory enumerate_modules(const PolyadPresentation& d) {
  return enumerate(d, module_indexing(*d.shape), "M");
}

ModuleCategory enumerate_representations(const PolyadPresentation& d) {
  return enumerate(d, representation_indexing(*d.shape), "R");
}

EMComparison em_algebras_restricted(const PolyadPresentation& d) {
  return compare(d, module_indexing(*d.shape), enumerate_modules(d), "modules vs algebras");
}

EMComparison em_representations_restricted(const PolyadPresentation& d) {
  return compare(d, representation_indexing(*d.shape), enumerate_representations(d), "representations vs algebras");
}

PolyadImage polyad_from_vect(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c,
                             std::vector<VObject> probes) {
  const FinCategory& D = *p.shape;
  if (c.delta.size() != D.num_morphisms() || c.epsilon.size() != D.num_morphisms())
    throw BoundaryError("need one comultiplication and one counit per morphism of the shape");
  PolyadImage out{vect_as_lazy_category(bk.q, std::move(probes)), {}, {}};
  const Category& v = out.image.v;
  LaxFunctor<VectBackend, CatBackend> L = vect_to_cat(out.image);

  PolyadPresentation& q = out.polyad;
  q.shape = p.shape;
  q.base.assign(D.num_objects(), v);
  for (const auto& f : p.F) q.F.push_back(L.on1(f));
  for (const auto& [hk, m] : p.mu) q.mu.emplace(hk, vcomp(L.on2(m), L.comparison(p.F[hk.first], p.F[hk.second])));
  for (std::size_t x = 0; x < D.num_objects(); ++x) q.eta.push_back(vcomp(L.on2(p.eta[x]), L.unit(p.base[x])));

  Functor tensor = vect_tensor_functor(v), unit = vect_unit_functor(v);
  out.opmonoidal.monoidal.tensor.assign(D.num_objects(), tensor);
  out.opmonoidal.monoidal.unit.assign(D.num_objects(), unit);
  const BraidParam braid = bk.q;
  for (std::size_t h = 0; h < D.num_morphisms(); ++h) {
    const VObject fh = p.F[h];
    const VMorphism delta = c.delta[h];
    const Functor& F = q.F[h];
    out.opmonoidal.d2.emplace_back(compose(F, tensor), compose(tensor, product(F, F)), [=](const Handle& ab) {
      const VObject& a = ab.first().as_object();
      const VObject& b = ab.second().as_object();
      VMorphism one_f = VMorphism::identity(fh), one_b = VMorphism::identity(b);
      return Handle(tensor_mor(tensor_mor(one_f, braiding(fh, a, braid)), one_b) *
                    tensor_mor(delta, VMorphism::identity(tensor_obj(a, b))));
    });
    const VMorphism eps = c.epsilon[h];
    out.opmonoidal.d0.emplace_back(compose(F, unit), unit, [eps](const Handle&) { return Handle(eps); });
  }
  return out;
}

}  // namespace spanv
