#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanv/atom.hpp"
#include "spanv/linalg.hpp"
#include "spanv/rational.hpp"

namespace spanv {

struct BasisVector {
  Atom label;
  int grade = 0;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

// Finite-dimensional Z-graded space given by an ordered labeled basis.
// Tensor labels are flattened tuples, which makes ⊗ strictly associative
// and strictly unital with K = span of the empty tuple in grade 0.
class VObject {
 public:
  VObject();  // K
  explicit VObject(std::vector<BasisVector> basis);
  static VObject unit() { return VObject(); }
  static VObject ungraded(std::size_t dim, std::string_view prefix = "e");
  static VObject zero() { return VObject(std::vector<BasisVector>{}); }

  std::size_t dim() const { return basis_->size(); }
  const std::vector<BasisVector>& basis() const { return *basis_; }
  const BasisVector& operator[](std::size_t i) const { return (*basis_)[i]; }
  std::optional<std::size_t> find(Atom label) const;
  std::string str() const;

  friend bool operator==(const VObject& a, const VObject& b) {
    return a.basis_ == b.basis_ || *a.basis_ == *b.basis_;
  }

 private:
  std::shared_ptr<const std::vector<BasisVector>> basis_;
};

VObject tensor_obj(const VObject& a, const VObject& b);

class BraidParam {
 public:
  explicit BraidParam(Rational q = Rational(1)) : q_(std::move(q)) {
    if (q_.is_zero()) throw std::invalid_argument("braid parameter must be nonzero");
  }
  const Rational& q() const { return q_; }
  friend bool operator==(const BraidParam&, const BraidParam&) = default;

 private:
  Rational q_;
};

// A linear map between graded spaces; rows index cod, columns index dom.
template <class Scalar>
class VMorphismT {
 public:
  using Matrix = MatrixX<Scalar>;

  VMorphismT() : VMorphismT(VObject(), VObject(), Matrix::Identity(1, 1)) {}
  VMorphismT(VObject dom, VObject cod, Matrix entries)
      : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(entries)) {
    if (static_cast<std::size_t>(m_.rows()) != cod_.dim() || static_cast<std::size_t>(m_.cols()) != dom_.dim())
      throw std::invalid_argument("matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                                  " but the map " + dom_.str() + " -> " + cod_.str() + " needs " +
                                  std::to_string(cod_.dim()) + "x" + std::to_string(dom_.dim()));
  }
  static VMorphismT identity(const VObject& x) {
    const auto n = static_cast<Eigen::Index>(x.dim());
    return VMorphismT(x, x, Matrix::Identity(n, n));
  }
  static VMorphismT zero(const VObject& dom, const VObject& cod) {
    return VMorphismT(dom, cod, Matrix::Zero(cod.dim(), dom.dim()));
  }
  // Basis map: column j has a single entry scale(j) in row target(j).
  template <class Target, class Scale>
  static VMorphismT basis_map(const VObject& dom, const VObject& cod, Target target, Scale scale) {
    Matrix m = Matrix::Zero(cod.dim(), dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j) m(target(j), j) = scale(j);
    return VMorphismT(dom, cod, std::move(m));
  }

  const VObject& dom() const { return dom_; }
  const VObject& cod() const { return cod_; }
  const Matrix& matrix() const { return m_; }
  const Scalar& operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  // True iff every nonzero entry joins basis vectors of equal grade.
  bool is_degree_preserving() const {
    for (Eigen::Index r = 0; r < m_.rows(); ++r)
      for (Eigen::Index c = 0; c < m_.cols(); ++c)
        if (m_(r, c) != Scalar(0) && cod_[r].grade != dom_[c].grade) return false;
    return true;
  }

  std::string str() const {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m_.rows(); ++r) {
      if (r) out += "; ";
      for (Eigen::Index c = 0; c < m_.cols(); ++c) {
        if (c) out += " ";
        std::ostringstream s;
        s << m_(r, c);
        out += s.str();
      }
    }
    return out + "]";
  }

  friend bool operator==(const VMorphismT& f, const VMorphismT& g) {
    return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.m_ == g.m_;
  }

  // g * f is g after f.
  friend VMorphismT operator*(const VMorphismT& g, const VMorphismT& f) {
    if (!(g.dom_ == f.cod_))
      throw std::invalid_argument("composing " + f.dom_.str() + " -> " + f.cod_.str() + " with " + g.dom_.str() +
                                  " -> " + g.cod_.str());
    return VMorphismT(f.dom_, g.cod_, sparse_product(g.m_, f.m_));
  }
  friend VMorphismT operator+(const VMorphismT& f, const VMorphismT& g) {
    if (!(f.dom_ == g.dom_) || !(f.cod_ == g.cod_)) throw std::invalid_argument("adding maps with different types");
    return VMorphismT(f.dom_, f.cod_, f.m_ + g.m_);
  }
  friend VMorphismT operator*(const Scalar& s, const VMorphismT& f) { return VMorphismT(f.dom_, f.cod_, s * f.m_); }

 private:
  VObject dom_, cod_;
  Matrix m_;
};

using VMorphism = VMorphismT<Rational>;

template <class Scalar>
VMorphismT<Scalar> tensor_mor(const VMorphismT<Scalar>& f, const VMorphismT<Scalar>& g) {
  return VMorphismT<Scalar>(tensor_obj(f.dom(), g.dom()), tensor_obj(f.cod(), g.cod()), kron(f.matrix(), g.matrix()));
}

// c_{a,b}: (a_i, b_j) -> q^(grade a_i * grade b_j) (b_j, a_i).
template <class Scalar = Rational>
VMorphismT<Scalar> braiding(const VObject& a, const VObject& b, const BraidParam& q, int power = 1) {
  const std::size_t nb = b.dim(), na = a.dim();
  return VMorphismT<Scalar>::basis_map(
      tensor_obj(a, b), tensor_obj(b, a), [&](std::size_t col) { return (col % nb) * na + col / nb; },
      [&](std::size_t col) {
        return Scalar(pow(q.q(), static_cast<long>(power) * a[col / nb].grade * b[col % nb].grade));
      });
}

// The inverse of c_{a,b}, as a map b⊗a -> a⊗b.
template <class Scalar = Rational>
VMorphismT<Scalar> braiding_inverse(const VObject& a, const VObject& b, const BraidParam& q) {
  const std::size_t nb = b.dim(), na = a.dim();
  return VMorphismT<Scalar>::basis_map(
      tensor_obj(b, a), tensor_obj(a, b), [&](std::size_t col) { return (col % na) * nb + col / na; },
      [&](std::size_t col) { return Scalar(pow(q.q(), -static_cast<long>(a[col % na].grade) * b[col / na].grade)); });
}

template <class Scalar>
struct VInversion {
  std::optional<VMorphismT<Scalar>> inverse;
  std::string witness;
  explicit operator bool() const { return inverse.has_value(); }
};

template <class Scalar>
VInversion<Scalar> invert(const VMorphismT<Scalar>& f) {
  auto inv = invert_matrix(f.matrix());
  if (!inv.inverse) return {std::nullopt, inv.witness};
  return {VMorphismT<Scalar>(f.cod(), f.dom(), std::move(*inv.inverse)), ""};
}

template <class Scalar>
std::optional<Scalar> determinant(const VMorphismT<Scalar>& f) {
  if (f.matrix().rows() != f.matrix().cols()) return std::nullopt;
  return bareiss(f.matrix()).determinant;
}

inline VMorphism identity(const VObject& x) { return VMorphism::identity(x); }

// First differing entry of two same-shaped matrices, as "(row,col): a vs b".
template <class Scalar>
std::optional<std::string> first_difference(const VMorphismT<Scalar>& f, const VMorphismT<Scalar>& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    return "types differ: " + f.dom().str() + " -> " + f.cod().str() + " vs " + g.dom().str() + " -> " + g.cod().str();
  for (Eigen::Index r = 0; r < f.matrix().rows(); ++r)
    for (Eigen::Index c = 0; c < f.matrix().cols(); ++c)
      if (!(f(r, c) == g(r, c))) {
        std::ostringstream s;
        s << "entry (" << r << "," << c << "): " << f(r, c) << " vs " << g(r, c);
        return s.str();
      }
  return std::nullopt;
}

}  // namespace spanv
