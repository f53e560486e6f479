#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "starcheck/field.hpp"

namespace starcheck {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t length);
bool is_zero_vector(const Vector& v);

/// v += c * w
void add_scaled(Vector& v, const Scalar& c, const Vector& w);

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept sorted by pivot column, every pivot equals 1 and every pivot
/// column is zero outside its own row. Since the RREF of a subspace is unique,
/// two builders fed any spanning sets of the same subspace end up with
/// identical rows.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t ambient);

  /// Returns true when `v` was independent of the current rows.
  bool insert(Vector v);

  /// Remainder of `v` after elimination against the rows.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  Field field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == ambient_; }

  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  void check_length(const Vector& v) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Writes a target as a combination of a fixed list of generators.
///
/// Only generators that enlarge the span are retained, so a solution touches
/// at most `ambient` generators.
class CombinationSolver {
 public:
  CombinationSolver(Field field, std::size_t ambient, std::span<const Vector> generators);

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Coefficients c with sum c_i * generators[i] == target, or nullopt when
  /// the target is outside the span. Zero coefficients are explicit.
  std::optional<Vector> solve(const Vector& target) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::size_t count_;
  // Each row is paired with its expression in terms of the generators.
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : equations * v = 0}, one free column per basis vector, in
/// increasing order of the free column.
std::vector<Vector> nullspace(Field field, std::size_t unknowns, std::span<const Vector> equations);

}  // namespace starcheck
