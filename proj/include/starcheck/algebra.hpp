#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "starcheck/echelon.hpp"
#include "starcheck/field.hpp"

namespace starcheck {

enum class Involution {
  transpose,
  /// X* = J X^t J^-1 with J = [[0, I_m], [-I_m, 0]]; needs n = 2m.
  symplectic,
  quaternion_conjugation,
};

std::string_view to_string(Involution involution);

class Element;

/// A finite-dimensional algebra with involution of the first kind: either
/// M_n(F) with the transpose or symplectic involution, or the rational
/// quaternions with conjugation.
///
/// Coordinates are row-major matrix entries, or the 1, i, j, k coefficients.
class Algebra {
 public:
  /// Throws AlgebraError for n == 0, symplectic with odd n, or conjugation.
  static Algebra matrices(Field field, std::size_t n, Involution involution);
  /// Throws AlgebraError for non-rational fields.
  static Algebra quaternions(Field field = Field::rationals());

  /// `mat:<n>:<transpose|symplectic>` or `quat`, together with a field spec.
  static Algebra parse(std::string_view spec, std::string_view field);

  bool is_matrix() const noexcept { return !quaternion_; }
  bool is_quaternion() const noexcept { return quaternion_; }
  /// Matrix size; 0 for the quaternions.
  std::size_t n() const noexcept { return n_; }
  /// Dimension of the underlying vector space (n^2 or 4).
  std::size_t dim() const noexcept { return quaternion_ ? 4 : n_ * n_; }
  Field field() const noexcept { return field_; }
  Involution involution() const noexcept { return involution_; }

  /// Inverse of parse(): "mat:4:symplectic" or "quat".
  std::string spec() const;
  /// Human readable, e.g. "M_4(Q), symplectic".
  std::string describe() const;

  Element zero() const;
  Element one() const;
  /// Standard basis vector of the coordinate space.
  Element basis_element(std::size_t index) const;
  /// e_{row,col} with 1-based indices as in the usual notation.
  Element matrix_unit(std::size_t row, std::size_t col) const;
  /// 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
  Element quaternion_unit(std::size_t index) const;

  Element from_int_coords(std::initializer_list<long> coords) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Algebra(Field field, std::size_t n, Involution involution, bool quaternion)
      : field_(field), n_(n), involution_(involution), quaternion_(quaternion) {}

  Field field_;
  std::size_t n_;
  Involution involution_;
  bool quaternion_;
};

class Element {
 public:
  /// Throws DimensionMismatch if `coords` does not have `algebra.dim()` entries.
  Element(Algebra algebra, Vector coords);

  const Algebra& algebra() const noexcept { return algebra_; }
  const Vector& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_.at(i); }
  /// Matrix entry with 1-based indices.
  const Scalar& entry(std::size_t row, std::size_t col) const;

  bool is_zero() const { return is_zero_vector(coords_); }
  bool is_symmetric() const;
  bool is_skew() const;

  Element star() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, Element a);

  friend bool operator==(const Element&, const Element&) = default;

  /// Sparse rendering such as "e12 - 1/2 e21" or "1 + 2 i"; "0" for zero.
  std::string to_string() const;

 private:
  void require_same_algebra(const Element& other) const;

  Algebra algebra_;
  Vector coords_;
};

struct SkSplit {
  Element symmetric;
  Element skew;
};

/// r = 1/2 (r + r*) + 1/2 (r - r*).
SkSplit sk_split(const Element& r);

/// z with a * z == 1, or nullopt when a is singular. In these
/// finite-dimensional algebras z is also a left inverse.
std::optional<Element> right_inverse(const Element& a);

/// Rank test on the n x n matrix; for the quaternions, a != 0.
bool is_invertible(const Element& a);

/// ab - ba
Element lie(const Element& a, const Element& b);
/// ab + ba
Element jordan(const Element& a, const Element& b);

/// Throws Unsupported for the quaternions.
Scalar trace(const Element& a);

Vector vectorize(const Element& a);
/// Throws DimensionMismatch on length mismatch.
Element devectorize(const Algebra& algebra, Vector coords);

/// Integer coordinates in [-bound, bound]; symmetric/skew variants are r + r*
/// and r - r* so entries stay integral.
enum class ElementKind { general, symmetric, skew };
Element random_element(const Algebra& algebra, std::mt19937_64& rng, ElementKind kind = ElementKind::general,
                       int bound = 5);

}  // namespace starcheck
