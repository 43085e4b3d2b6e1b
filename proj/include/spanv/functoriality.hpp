#pragma once

#include "spanv/cat.hpp"
#include "spanv/cells.hpp"

namespace spanv {

// The monoidal pseudofunctor V → Cat: • ↦ V, p ↦ p⊗(−), f ↦ f⊗(−).
// V is strict, so both comparison cells have identity components.
LaxFunctor<VectBackend, CatBackend> vect_to_cat(const VectImage& image);

// Pointwise check that the comparison cells are invertible and that
// F preserves vertical composition and identities on the given samples.
Report check_vect_to_cat(const VectImage& image, const std::vector<VObject>& objects,
                         const std::vector<VMorphism>& morphisms);

}  // namespace spanv
