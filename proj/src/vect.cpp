#include "spanv/vect.hpp"

#include <unordered_set>

namespace spanv {

VObject::VObject() : basis_(std::make_shared<const std::vector<BasisVector>>(1, BasisVector{Atom(), 0})) {}

VObject::VObject(std::vector<BasisVector> basis) {
  std::unordered_set<Atom> seen;
  for (const auto& b : basis)
    if (!seen.insert(b.label).second) throw std::invalid_argument("duplicate basis label " + b.label.str());
  basis_ = std::make_shared<const std::vector<BasisVector>>(std::move(basis));
}

VObject VObject::ungraded(std::size_t dim, std::string_view prefix) {
  std::vector<BasisVector> b;
  for (std::size_t i = 0; i < dim; ++i) b.push_back({Atom::of(std::string(prefix) + std::to_string(i)), 0});
  return VObject(std::move(b));
}

std::optional<std::size_t> VObject::find(Atom label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if ((*basis_)[i].label == label) return i;
  return std::nullopt;
}

std::string VObject::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ",";
    out += (*basis_)[i].label.str();
    if ((*basis_)[i].grade != 0) out += ":" + std::to_string((*basis_)[i].grade);
  }
  return out + ">";
}

VObject tensor_obj(const VObject& a, const VObject& b) {
  if (a.dim() == 1 && a[0].label == Atom() && a[0].grade == 0) return b;
  if (b.dim() == 1 && b[0].label == Atom() && b[0].grade == 0) return a;
  std::vector<BasisVector> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) out.push_back({flatten_concat(x.label, y.label), x.grade + y.grade});
  return VObject(std::move(out));
}

}  // namespace spanv
