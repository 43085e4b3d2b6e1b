#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spanv/monad.hpp"
#include "spanv/monoidale.hpp"

namespace spanv {

using VMonad = MonadPresentation<VectBackend>;
using VMonadCells = MonadCells<VectBackend>;

// δ_h: F(h) → F(h)⊗F(h) and ε_h: F(h) → K, per morphism of the shape.
struct ComonoidStructure {
  std::vector<VMorphism> delta, epsilon;
};

// F with its comonoid labels, as an endo-cell of the duoidal Span|V(X,X).
ComonoidLabeledCell comonoid_cell(const VMonadCells& t, const ComonoidStructure& c);

// On the induced monoidale of D⁰:
//   f2: (h, s h) ↦ (t h, (h,h)) with component δ_h
//   f0: (h, s h) ↦ t h with component ε_h
OpmonoidalCells<VectBackend> opmonoidal_cells(const VectBackend& bk, const VMonadCells& t, const ComonoidStructure& c);

// Each (δ_h, ε_h) is a comonoid, and μ, η are maps of •-comonoids:
//   δ∘μ = (μ•μ)∘ζ∘(δ∘δ)    ε∘μ = μ_J∘(ε∘ε)    δ∘η = (η•η)∘Δ_I    ε∘η = ι
Report check_opmonoidal(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c);

VCell2 left_fusion(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c);
VCell2 right_fusion(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c);

struct FusionDeterminant {
  Atom at;                           // apex element of the fusion source
  std::optional<Rational> value;     // empty for a non-square component
};

struct HopfResult {
  HopfVerdict verdict;
  std::optional<std::string> groupoid_witness;  // set when the shape is not a groupoid
  std::vector<FusionDeterminant> left, right;
};

HopfResult is_hopf(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c);

// σ_h: F(h) → F(h⁻¹), checked componentwise:
//   μ_{h,h⁻¹}∘(1⊗σ_h)∘δ_h = η_{t h}∘ε_h    μ_{h⁻¹,h}∘(σ_h⊗1)∘δ_h = η_{s h}∘ε_h
Report check_antipode(const VMonad& p, const ComonoidStructure& c, const std::vector<VMorphism>& sigma);

// The same two equations as composites of 2-cells: σ becomes a 2-cell
// F† ⇒ F from the reversed span, and the first axiom reads
//   S ⇒ F∘F† ⇒ F∘F ⇒ F   against   S ⇒ I ⇒ F
// with S the span D⁰ ←t D¹ →t D⁰ labeled F. The second uses s and F†∘F.
// The report also records whether the verdict agrees with check_antipode.
Report check_antipode_duoidal(const VectBackend& bk, const VMonad& p, const ComonoidStructure& c,
                              const std::vector<VMorphism>& sigma);

struct AntipodeResult {
  std::optional<std::vector<VMorphism>> sigma;
  std::string witness;
};

// Solves both antipode equations exactly, one morphism at a time.
AntipodeResult compute_antipode(const VMonad& p, const ComonoidStructure& c);

// ---- group monoids ----

struct GroupMonoidPresentation {
  FinSet elements;
  std::vector<std::vector<std::size_t>> table;  // table[p][q] = p·q
  std::size_t unit = 0;
  std::vector<VObject> g;
  std::map<std::pair<std::size_t, std::size_t>, VMorphism> mu;  // g(p)⊗g(q) → g(pq)
  VMorphism eta;                                                // K → g(e)
  std::optional<ComonoidStructure> comonoid;
  std::optional<std::vector<VMorphism>> antipode;  // σ_p: g(p) → g(p⁻¹)
};

VMonad to_monad(const GroupMonoidPresentation& g);
Report check_antipode_group(const GroupMonoidPresentation& g);

// ---- enriched categories ----

// Everything indexed by x·n + y for the pair (x,y); a(x,y) is the hom into
// x from y, the morphism (x,y) of the indiscrete shape.
struct EnrichedCatPresentation {
  FinSet objects;
  std::vector<VObject> a;
  std::map<std::array<std::size_t, 3>, VMorphism> mu;  // a(x,y)⊗a(y,z) → a(x,z)
  std::vector<VMorphism> eta;                          // K → a(x,x)
  std::optional<ComonoidStructure> comonoid;
  std::optional<std::vector<VMorphism>> antipode;  // σ_{x,y}: a(x,y) → a(y,x)
};

VMonad to_monad(const EnrichedCatPresentation& e);
Report check_antipode_enriched(const EnrichedCatPresentation& e);

// A module over an enriched category: v(x,y) with
// ψ_{x,y,z}: a(x,y)⊗v(y,z) → v(x,z), indexed like the presentation.
struct BCVModule {
  std::vector<VObject> v;
  std::map<std::array<std::size_t, 3>, VMorphism> psi;
};

// Associativity ψ_{x,y,u}(1⊗ψ_{y,z,u}) = ψ_{x,z,u}(μ_{x,y,z}⊗1) and
// unitality ψ_{x,x,y}(η_x⊗1) = 1. With comonoid data, also checks that
// the product with itself and with the unit module are modules again.
Report check_bcv_module(const VectBackend& bk, const EnrichedCatPresentation& e, const BCVModule& m);
// φ_{x,z}∘ψ_{x,y,z} = ψ'_{x,y,z}∘(1⊗φ_{y,z})
Report check_bcv_morphism(const EnrichedCatPresentation& e, const BCVModule& from, const BCVModule& to,
                          const std::vector<VMorphism>& phi);

BCVModule bcv_unit_module(const EnrichedCatPresentation& e);     // K with ε⊗1
BCVModule bcv_regular_module(const EnrichedCatPresentation& e);  // a with μ
// (v⊗w)(x,y) = v(x,y)⊗w(x,y), acted on by (ψ⊗ψ')∘(1⊗c⊗1)∘(δ⊗1⊗1).
BCVModule bcv_product(const VectBackend& bk, const EnrichedCatPresentation& e, const BCVModule& m,
                      const BCVModule& n);

}  // namespace spanv
