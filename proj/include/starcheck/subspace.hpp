#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "starcheck/algebra.hpp"
#include "starcheck/echelon.hpp"

namespace starcheck {

/// A linear subspace of F^d stored as its reduced row echelon basis.
///
/// The basis is canonical, so equality is structural.
class Subspace {
 public:
  /// Throws DimensionMismatch when a vector does not have length `ambient`.
  static Subspace span(Field field, std::size_t ambient, std::span<const Vector> vectors);
  static Subspace span(const Algebra& algebra, std::span<const Element> elements);
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);

  Field field() const noexcept { return echelon_.field(); }
  std::size_t ambient() const noexcept { return echelon_.ambient(); }
  std::size_t dim() const noexcept { return echelon_.rank(); }
  bool is_full() const noexcept { return echelon_.full(); }
  const std::vector<Vector>& basis() const noexcept { return echelon_.rows(); }

  bool contains(const Vector& v) const;
  bool contains(const Element& e) const { return contains(e.coords()); }
  bool is_subspace_of(const Subspace& other) const;

  /// Basis vectors as elements of `algebra`.
  std::vector<Element> elements(const Algebra& algebra) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(EchelonBasis echelon) : echelon_(std::move(echelon)) {}
  void require_compatible(const Subspace& other) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);

  EchelonBasis echelon_;
};

Subspace sum(const Subspace& a, const Subspace& b);

/// Membership through the annihilator: v is in U iff f . v = 0 for every f
/// spanning the orthogonal complement of U. Cheap when U has small codimension.
class MembershipTest {
 public:
  explicit MembershipTest(const Subspace& subspace);

  bool contains(const Vector& v) const;
  bool contains(const Element& e) const { return contains(e.coords()); }
  std::size_t codim() const noexcept { return functionals_.size(); }

 private:
  Field field_;
  std::vector<Vector> functionals_;
};

enum class ProductMode { product, jordan, lie };

/// Span of phi(a, b) over basis pairs of A and B.
Subspace product_span(const Algebra& algebra, const Subspace& a, const Subspace& b,
                      ProductMode mode = ProductMode::product);

/// {r : r g = g r for every generator g}.
Subspace centralizer(const Algebra& algebra, std::span<const Element> generators);

}  // namespace starcheck
