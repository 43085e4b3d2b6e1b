#include "spanv/functoriality.hpp"

namespace spanv {

LaxFunctor<VectBackend, CatBackend> vect_to_cat(const VectImage& image) {
  Category v = image.v;
  LaxFunctor<VectBackend, CatBackend> F;
  F.on0 = [v](const VectBackend::Obj0&) { return v; };
  F.on1 = [v](const VObject& p) { return tensor_left(v, p); };
  F.on2 = [v](const VMorphism& f) { return tensor_left(v, f); };
  F.comparison = [v](const VObject& b, const VObject& a) {
    Functor to = tensor_left(v, tensor_obj(b, a));
    return NatTrans(compose(tensor_left(v, b), tensor_left(v, a)), to,
                    [to](const Handle& x) { return Handle(VMorphism::identity(to.on_object(x).as_object())); });
  };
  F.unit = [v](const VectBackend::Obj0&) {
    Functor to = tensor_left(v, VObject::unit());
    return NatTrans(Functor::identity(v), to,
                    [](const Handle& x) { return Handle(VMorphism::identity(x.as_object())); });
  };
  return F;
}

Report check_vect_to_cat(const VectImage& image, const std::vector<VObject>& objects,
                         const std::vector<VMorphism>& morphisms) {
  Report r("pseudofunctor V -> Cat");
  auto F = vect_to_cat(image);
  for (const auto& b : objects)
    for (const auto& a : objects) {
      NatTrans c = F.comparison(b, a);
      r.count();
      if (auto v = nat_is_iso(c); !v) r.fail("comparison at (" + b.str() + "," + a.str() + ")", v.witness);
      if (auto d = check_naturality(c); !d.passed()) r.absorb(d);
    }
  if (auto v = nat_is_iso(F.unit({})); !v) r.fail("unit comparison", v.witness);
  for (const auto& f : morphisms) {
    if (auto d = nat_difference(F.on2(VMorphism::identity(f.dom())), NatTrans::identity(F.on1(f.dom()))))
      r.fail("identity " + f.dom().str(), *d);
    for (const auto& g : morphisms) {
      if (!(g.dom() == f.cod())) continue;
      r.count();
      if (auto d = nat_difference(F.on2(g * f), vcomp(F.on2(g), F.on2(f))))
        r.fail("composite " + g.str() + " * " + f.str(), *d);
    }
  }
  for (const auto& p : objects)
    for (const auto& s : objects) {
      NatTrans pc = image.product_compatibility(p, s);
      auto inv = image.product_compatibility_inverse(p, s);
      r.count();
      if (auto v = nat_is_iso(pc); !v) r.fail("product compatibility (" + p.str() + "," + s.str() + ")", v.witness);
      if (auto d = nat_difference(vcomp(inv, pc), NatTrans::identity(pc.from())))
        r.fail("product compatibility inverse (" + p.str() + "," + s.str() + ")", *d);
    }
  return r;
}

}  // namespace spanv
