#pragma once

#include <vector>

#include "spanv/cells.hpp"
#include "spanv/report.hpp"

namespace spanv {

// ---- structural 1-cells of the monoidal bicategory Span|V ----

// (X⊗Y)⊗Z → X⊗(Y⊗Z) and back: bijection spans labeled K.
VCell1 tensor_associator(const VCell0& x, const VCell0& y, const VCell0& z);
VCell1 tensor_associator_inverse(const VCell0& x, const VCell0& y, const VCell0& z);
VCell1 left_unit_cell(const VCell0& x);   // 1⊗X → X
VCell1 right_unit_cell(const VCell0& x);  // X⊗1 → X

// A monoidale on `base`:
//   alpha:  m∘(m⊗1) ⇒ m∘((1⊗m)∘a)
//   lambda: m∘(u⊗1) ⇒ l
//   rho:    m∘(1⊗u) ⇒ r
struct MonoidaleData {
  VCell0 base;
  VCell1 m, u;
  VCell2 alpha, lambda, rho;
};

// m = (X =id X →Δ X×X), u = (X =id X → 1), labels constantly K.
MonoidaleData induced_monoidale(const VectBackend& bk, const FinSet& x);

// Coherence 2-cells must be invertible with the boundaries above; the
// pentagon and triangle are compared after structural transport. Structural
// cells are read off the legs, so the structure 1-cells must compose to
// jointly monic spans (true whenever their left legs are injective).
Report check_monoidale(const VectBackend& bk, const MonoidaleData& mon);

// m* ⊣ m and u* ⊣ u with
//   m_unit: 1_X ⇒ m∘m*     m_counit: m*∘m ⇒ 1_{X⊗X}
//   u_unit: 1_X ⇒ u∘u*     u_counit: u*∘u ⇒ 1_1
struct OpmapAdjunctions {
  VCell1 m_star, u_star;
  VCell2 m_unit, m_counit, u_unit, u_counit;
};

OpmapAdjunctions opmap_adjunctions(const VectBackend& bk, const MonoidaleData& mon);

// Both triangle identities of f ⊣ g with unit 1 ⇒ g∘f and counit f∘g ⇒ 1.
Report check_adjunction(const VectBackend& bk, const VCell1& f, const VCell1& g, const VCell2& unit,
                        const VCell2& counit, const std::string& name);

// Frobenius comparison cells, both mates of alpha through m* ⊣ m:
//   left:  m*∘m ⇒ (1⊗m)∘a∘(m*⊗1)     = (ε∘1)·(1∘α∘1)·(1∘1∘(η⊗1))
//   right: m*∘m ⇒ (m⊗1)∘a⁻¹∘(1⊗m*)   = (ε∘1)·(1∘α'∘1)·(1∘1∘(1⊗η))
// where α' : m∘(1⊗m) ⇒ m∘(m⊗1)∘a⁻¹ is α inverted and transported along
// a∘a⁻¹ ≅ 1. The left cell is the primary convention.
struct FrobeniusCells {
  VCell2 left, right;
};

FrobeniusCells frobenius_cells(const VectBackend& bk, const MonoidaleData& mon, const OpmapAdjunctions& adj);
Report check_frobenius(const VectBackend& bk, const MonoidaleData& mon, const OpmapAdjunctions& adj);

// ---- the duoidal endohom Span|V(X,X) over the induced monoidale ----

// Convolution: apex {(c,h) | l(c)=l(h), r(c)=r(h)}, label b(c)⊗a(h).
VCell1 star1(const VectBackend& bk, const VCell1& b, const VCell1& a);
VCell2 star2(const VectBackend& bk, const VCell2& g, const VCell2& f);

// (c•b)•a ⇒ c•(b•a), J•a ⇒ a, a•J ⇒ a.
VCell2 star_associator(const VectBackend& bk, const VCell1& c, const VCell1& b, const VCell1& a);
VCell2 star_left_unitor(const VectBackend& bk, const VCell1& a);
VCell2 star_right_unitor(const VectBackend& bk, const VCell1& a);

// ζ: (a•b)∘(h•d) ⇒ (a∘h)•(b∘d), ((p,q),(v,w)) ↦ ((p,v),(q,w)) with
// components 1⊗c_{b(q),h(v)}⊗1.
VCell2 duoidal_interchange(const VectBackend& bk, const VCell1& a, const VCell1& b, const VCell1& h, const VCell1& d);

VCell1 unit_span(const VCell0& x);      // I = 1_X
VCell1 complete_span(const VCell0& x);  // J = X ← X×X → X

struct DuoidalUnits {
  VCell1 I, J;
  VCell2 mu_J;     // J∘J ⇒ J, ((p,q),(q,v)) ↦ (p,v)
  VCell2 delta_I;  // I ⇒ I•I, x ↦ (x,x)
  VCell2 iota;     // I ⇒ J, the diagonal
};

DuoidalUnits duoidal_units(const VectBackend& bk, const VCell0& x);

// Every duoidal axiom instantiated at the given endo-cells: ζ against both
// associators, ζ against both units, J a ∘-monoid and I a •-comonoid.
Report check_duoidal_at(const VectBackend& bk, const DuoidalUnits& u, const std::vector<VCell1>& six);

// A cell with a comonoid structure on each label.
struct ComonoidLabeledCell {
  VCell1 cell;
  std::vector<VMorphism> delta;    // a(h) → a(h)⊗a(h)
  std::vector<VMorphism> epsilon;  // a(h) → K
};

Report check_comonoid_cell(const ComonoidLabeledCell& c);
VCell2 comultiplication2(const VectBackend& bk, const ComonoidLabeledCell& c);  // a ⇒ a•a
VCell2 counit2(const VectBackend& bk, const ComonoidLabeledCell& c);            // a ⇒ J

// Over the singleton: b∘a and b•a coincide, I ≅ J, the structure maps
// agree, and the braiding derived from ζ satisfies both hexagons.
VCell2 zunino_braiding(const VectBackend& bk, const VCell1& a, const VCell1& b);  // a∘b ⇒ b∘a
Report zunino_check(const VectBackend& bk, const std::vector<VCell1>& cells);

}  // namespace spanv
