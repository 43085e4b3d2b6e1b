#pragma once

#include <stdexcept>

#include "spanv/hopf.hpp"

namespace spanv::testing {

// Left fusion source elements are (h, (x, (k, y))), right ones (h, (x, (y, k)));
// returns the component at (h, k).
inline const VMorphism& fusion_at(const VCell2& f, Atom h, Atom k, std::size_t* index = nullptr, bool right = false) {
  for (std::size_t i = 0; i < f.from().apex().size(); ++i) {
    Atom e = f.from().apex()[i];
    Atom inner = e.second().second();
    if (e.first() == h && (right ? inner.second() : inner.first()) == k) {
      if (index) *index = i;
      return f.component(i);
    }
  }
  throw std::logic_error("no fusion element at " + h.str() + "," + k.str());
}

// The componentwise oracle (μ_{p,q}⊗1)∘(1⊗c_{g p, g q})∘(δ_p⊗1).
inline VMorphism fusion_oracle(const VectBackend& bk, const GroupMonoidPresentation& g, std::size_t p, std::size_t q) {
  const VObject &a = g.g[p], &b = g.g[q];
  VMorphism one_a = VMorphism::identity(a);
  return tensor_mor(g.mu.at({p, q}), one_a) * tensor_mor(one_a, braiding(a, b, bk.q)) *
         tensor_mor(g.comonoid->delta[p], VMorphism::identity(b));
}

// Right-hand oracle (1⊗μ_{p,q})∘(δ_p⊗1).
inline VMorphism right_oracle(const GroupMonoidPresentation& g, std::size_t p, std::size_t q) {
  return tensor_mor(VMorphism::identity(g.g[p]), g.mu.at({p, q})) *
         tensor_mor(g.comonoid->delta[p], VMorphism::identity(g.g[q]));
}

}  // namespace spanv::testing
