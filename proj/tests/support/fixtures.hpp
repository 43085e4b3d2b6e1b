#pragma once

#include <optional>
#include <string>

#include "spanv/hopf.hpp"

// Small presentations built by hand, independent of the file format.
namespace spanv::testing {

struct MonoidTable {
  FinSet elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t unit = 0;

  std::optional<std::size_t> inverse(std::size_t p) const {
    for (std::size_t q = 0; q < table.size(); ++q)
      if (table[p][q] == unit && table[q][p] == unit) return q;
    return std::nullopt;
  }
};

inline MonoidTable cyclic(std::size_t n) {
  MonoidTable m{FinSet::range(n), std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)), 0};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m.table[p][q] = (p + q) % n;
  return m;
}

// {1, z | z² = z}
inline MonoidTable idempotent() { return {FinSet({Atom::of("1"), Atom::of("z")}), {{0, 1}, {1, 1}}, 0}; }

// An algebra with a comonoid structure and possibly an antipode.
struct Algebra {
  VObject obj;
  VMorphism mul, unit, delta, eps;
  std::optional<VMorphism> antipode;
};

inline Algebra unit_algebra() {
  VObject k = VObject::unit();
  VMorphism one = VMorphism::identity(k);
  return {k, one, one, one, one, one};
}

// Q[M] with the grouplike comonoid; the antipode is inversion when M is a group.
inline Algebra monoid_algebra(const MonoidTable& m, const std::string& tag) {
  const std::size_t n = m.elements.size();
  std::vector<BasisVector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back({Atom::of(tag + m.elements[i].str()), 0});
  VObject x(b);
  VObject xx = tensor_obj(x, x);
  auto one = [](std::size_t) { return Rational(1); };
  Algebra a{x,
            VMorphism::basis_map(xx, x, [&](std::size_t j) { return m.table[j / n][j % n]; }, one),
            VMorphism::basis_map(VObject::unit(), x, [&](std::size_t) { return m.unit; }, one),
            VMorphism::basis_map(x, xx, [&](std::size_t j) { return j * n + j; }, one),
            VMorphism(x, VObject::unit(), VMorphism::Matrix::Ones(1, static_cast<Eigen::Index>(n))),
            std::nullopt};
  bool group = true;
  for (std::size_t p = 0; p < n; ++p) group = group && m.inverse(p).has_value();
  if (group) a.antipode = VMorphism::basis_map(x, x, [&](std::size_t j) { return *m.inverse(j); }, one);
  return a;
}

// Λ(x): 1 in grade 0, x in grade 1, x² = 0, δx = x⊗1 + 1⊗x, ε(x) = 0, S(x) = -x.
inline Algebra exterior_algebra(const std::string& tag) {
  VObject x({{Atom::of(tag + "1"), 0}, {Atom::of(tag + "x"), 1}});
  VObject xx = tensor_obj(x, x);
  VMorphism::Matrix mul = VMorphism::Matrix::Zero(2, 4);
  mul(0, 0) = 1;  // 1·1
  mul(1, 1) = 1;  // 1·x
  mul(1, 2) = 1;  // x·1
  VMorphism::Matrix unit = VMorphism::Matrix::Zero(2, 1);
  unit(0, 0) = 1;
  VMorphism::Matrix d = VMorphism::Matrix::Zero(4, 2);
  d(0, 0) = 1;
  d(1, 1) = 1;
  d(2, 1) = 1;
  VMorphism::Matrix e = VMorphism::Matrix::Zero(1, 2);
  e(0, 0) = 1;
  VMorphism::Matrix s = VMorphism::Matrix::Zero(2, 2);
  s(0, 0) = 1;
  s(1, 1) = -1;
  return {x,
          VMorphism(xx, x, mul),
          VMorphism(VObject::unit(), x, unit),
          VMorphism(x, xx, d),
          VMorphism(x, VObject::unit(), e),
          VMorphism(x, x, s)};
}

// g(p) = A for every p, μ_{p,q} the multiplication of A.
inline GroupMonoidPresentation constant_presentation(const MonoidTable& m, const Algebra& a) {
  GroupMonoidPresentation g;
  g.elements = m.elements;
  g.table = m.table;
  g.unit = m.unit;
  const std::size_t n = m.elements.size();
  g.g.assign(n, a.obj);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) g.mu.emplace(std::pair{p, q}, a.mul);
  g.eta = a.unit;
  g.comonoid = ComonoidStructure{std::vector<VMorphism>(n, a.delta), std::vector<VMorphism>(n, a.eps)};
  bool group = true;
  for (std::size_t p = 0; p < n; ++p) group = group && m.inverse(p).has_value();
  if (group && a.antipode) g.antipode = std::vector<VMorphism>(n, *a.antipode);
  return g;
}

// a(x,y) = A for every pair: the linearization of X×X×G when A = Q[G].
inline EnrichedCatPresentation constant_enriched(const FinSet& objects, const Algebra& a) {
  const std::size_t n = objects.size();
  EnrichedCatPresentation e;
  e.objects = objects;
  e.a.assign(n * n, a.obj);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) e.mu.emplace(std::array{x, y, z}, a.mul);
  e.eta.assign(n, a.unit);
  e.comonoid = ComonoidStructure{std::vector<VMorphism>(n * n, a.delta), std::vector<VMorphism>(n * n, a.eps)};
  if (a.antipode) e.antipode = std::vector<VMorphism>(n * n, *a.antipode);
  return e;
}

inline FinSet points(std::size_t n) {
  std::vector<Atom> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Atom::of(std::string(1, static_cast<char>('x' + i))));
  return FinSet(v);
}

}  // namespace spanv::testing
