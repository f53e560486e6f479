#include "starcheck/subspace.hpp"

#include "starcheck/errors.hpp"

namespace starcheck {

Subspace Subspace::span(Field field, std::size_t ambient, std::span<const Vector> vectors) {
  EchelonBasis echelon(field, ambient);
  for (const auto& v : vectors) echelon.insert(v);
  return Subspace(std::move(echelon));
}

Subspace Subspace::span(const Algebra& algebra, std::span<const Element> elements) {
  EchelonBasis echelon(algebra.field(), algebra.dim());
  for (const auto& e : elements) {
    if (e.algebra() != algebra) throw AlgebraError("element outside " + algebra.describe());
    echelon.insert(e.coords());
  }
  return Subspace(std::move(echelon));
}

Subspace Subspace::zero(Field field, std::size_t ambient) {
  return Subspace(EchelonBasis(field, ambient));
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  EchelonBasis echelon(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v = zero_vector(field, ambient);
    v[i] = Scalar::one(field);
    echelon.insert(std::move(v));
  }
  return Subspace(std::move(echelon));
}

void Subspace::require_compatible(const Subspace& other) const {
  if (ambient() != other.ambient()) {
    throw DimensionMismatch("subspaces of F^" + std::to_string(ambient()) + " and F^" +
                            std::to_string(other.ambient()));
  }
  if (field() != other.field()) throw FieldMismatch();
}

bool Subspace::contains(const Vector& v) const {
  return echelon_.contains(v);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  require_compatible(other);
  if (dim() > other.dim()) return false;
  for (const auto& row : basis()) {
    if (!other.contains(row)) return false;
  }
  return true;
}

std::vector<Element> Subspace::elements(const Algebra& algebra) const {
  if (algebra.dim() != ambient()) throw DimensionMismatch("subspace does not live in " + algebra.describe());
  std::vector<Element> out;
  out.reserve(dim());
  for (const auto& row : basis()) out.emplace_back(algebra, row);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  a.require_compatible(b);
  return a.basis() == b.basis();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  a.require_compatible(b);
  EchelonBasis echelon = a.echelon_;
  for (const auto& row : b.basis()) {
    if (echelon.full()) break;
    echelon.insert(row);
  }
  return Subspace(std::move(echelon));
}

MembershipTest::MembershipTest(const Subspace& subspace)
    : field_(subspace.field()), functionals_(nullspace(subspace.field(), subspace.ambient(), subspace.basis())) {}

bool MembershipTest::contains(const Vector& v) const {
  for (const auto& f : functionals_) {
    if (f.size() != v.size()) throw DimensionMismatch("vector length does not match the subspace");
    Scalar acc(field_);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!f[i].is_zero() && !v[i].is_zero()) acc += f[i] * v[i];
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

Subspace product_span(const Algebra& algebra, const Subspace& a, const Subspace& b, ProductMode mode) {
  if (a.ambient() != algebra.dim() || b.ambient() != algebra.dim()) {
    throw DimensionMismatch("operand subspaces do not live in " + algebra.describe());
  }
  const auto left = a.elements(algebra);
  const auto right = b.elements(algebra);
  EchelonBasis echelon(algebra.field(), algebra.dim());
  for (const auto& x : left) {
    for (const auto& y : right) {
      if (echelon.full()) return Subspace::span(algebra.field(), algebra.dim(), echelon.rows());
      switch (mode) {
        case ProductMode::product:
          echelon.insert((x * y).coords());
          break;
        case ProductMode::jordan:
          echelon.insert(jordan(x, y).coords());
          break;
        case ProductMode::lie:
          echelon.insert(lie(x, y).coords());
          break;
      }
    }
  }
  return Subspace::span(algebra.field(), algebra.dim(), echelon.rows());
}

Subspace centralizer(const Algebra& algebra, std::span<const Element> generators) {
  const auto d = algebra.dim();
  // Column c of each commutator block is [e_c, g]; row i of the block is one equation.
  std::vector<Vector> equations;
  for (const auto& g : generators) {
    std::vector<Vector> columns;
    columns.reserve(d);
    for (std::size_t c = 0; c < d; ++c) columns.push_back(lie(algebra.basis_element(c), g).coords());
    for (std::size_t i = 0; i < d; ++i) {
      Vector row = zero_vector(algebra.field(), d);
      for (std::size_t c = 0; c < d; ++c) row[c] = columns[c][i];
      if (!is_zero_vector(row)) equations.push_back(std::move(row));
    }
  }
  const auto solutions = nullspace(algebra.field(), d, equations);
  return Subspace::span(algebra.field(), d, solutions);
}

}  // namespace starcheck
