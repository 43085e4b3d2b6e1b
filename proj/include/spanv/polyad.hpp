#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanv/cat.hpp"
#include "spanv/hopf.hpp"
#include "spanv/monad.hpp"

namespace spanv {

// A polyad: a lax functor from the shape into Cat, i.e. a monad in Span|Cat.
// base[x] = C_x, F[h] = d(h): C_{s h} → C_{t h}.
using PolyadPresentation = MonadPresentation<CatBackend>;
using PolyadCells = MonadCells<CatBackend>;

Report check_polyad(const PolyadPresentation& d);

// Strict monoidal structure on each C_x.
struct PolyadMonoidal {
  std::vector<Functor> tensor;  // C_x × C_x → C_x
  std::vector<Functor> unit;    // 1 → C_x
};

// Each d(h) opmonoidal:
//   d2_h: d(h)∘⊗ ⇒ ⊗∘(d(h)×d(h))    d0_h: d(h)∘unit ⇒ unit
struct PolyadOpmonoidal {
  PolyadMonoidal monoidal;
  std::vector<NatTrans> d2, d0;
};

// Boundaries and naturality of d2, d0, and μ, η opmonoidal transformations,
// on the sampled objects.
Report check_polyad_opmonoidal(const PolyadPresentation& d, const PolyadOpmonoidal& op);

// m = (D⁰ =id D⁰ →Δ D⁰×D⁰) labeled ⊗_x, u = (D⁰ =id D⁰ → 1) labeled unit_x.
OpmonoidalCells<CatBackend> polyad_opmonoidal_cells(const PolyadCells& t, const PolyadOpmonoidal& op);

// Left and right fusion as 2-cells of Span|Cat; the component at (h,k) is
// the transformation (μ_{h,k}×1)∘d2_h(d(k)−, −) and its mirror.
struct PolyadFusion {
  Cell2<CatBackend> left, right;
};
PolyadFusion polyad_fusion(const PolyadPresentation& d, const PolyadOpmonoidal& op);

// Hopf iff the shape is a groupoid and every fusion component is invertible.
HopfVerdict polyad_is_hopf(const PolyadPresentation& d, const PolyadOpmonoidal& op);

// ---- modules and representations ----

// Module: q_x ∈ C_x with ϱ_f: d(f) q_{s f} → q_{t f}.
// Representation: W_k ∈ C_{t k} with ϱ_{g,k}: d(g) W_k → W_{g·k}.
// Both are families W_i over an index set with actions at the pairs (h,i)
// listed in ModuleCategory::pairs.
struct PolyadModule {
  std::vector<Handle> objects;
  std::vector<Handle> actions;
  friend bool operator==(const PolyadModule&, const PolyadModule&) = default;
};
using PolyadRepresentation = PolyadModule;

struct ModuleMorphism {
  std::size_t from, to;
  std::vector<Handle> components;  // χ_x resp. φ_k
};

struct ModuleCategory {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (h, i) with s h = leg(i)
  std::vector<PolyadModule> objects;
  std::vector<ModuleMorphism> morphisms;
  FinCategoryPtr category;  // objects and morphisms in the order above
};

// Exhaustive; every C_x must be finite.
ModuleCategory enumerate_modules(const PolyadPresentation& d);
ModuleCategory enumerate_representations(const PolyadPresentation& d);

// Algebras (Q, a: F∘Q ⇒ Q) of the induced monad on Span|Cat((1,1),(D⁰,C)),
// restricted to Q = D⁰ ← D⁰ → 1 (modules) or Q = D⁰ ←t D¹ → 1 with the action
// map the composition (representations), checked with 2-cells. The report
// covers the comparison with the direct enumeration: equal counts and a
// functor pair verified to be mutually inverse. The pair is absent when some
// object or morphism has no counterpart.
struct EMComparison {
  ModuleCategory algebras;
  std::optional<FunctorData> to_algebras, from_algebras;
  Report report;
};
EMComparison em_algebras_restricted(const PolyadPresentation& d);
EMComparison em_representations_restricted(const PolyadPresentation& d);

// ---- the image of a V-presentation under V → Cat ----

// F h ↦ F h⊗(−), μ ↦ μ⊗(−) after the (identity) comparison, with
// d2_h(A,B) = (1⊗c_{F h,A}⊗1)∘(δ_h⊗1⊗1) and d0_h = ε_h.
struct PolyadImage {
  VectImage image;
  PolyadPresentation polyad;
  PolyadOpmonoidal opmonoidal;
};
PolyadImage polyad_from_vect(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c,
                             std::vector<VObject> probes);

}  // namespace spanv
