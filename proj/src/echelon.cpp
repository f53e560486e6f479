#include "starcheck/echelon.hpp"

#include <algorithm>
#include <string>

namespace starcheck {

Vector zero_vector(Field field, std::size_t length) {
  return Vector(length, Scalar(field));
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void add_scaled(Vector& v, const Scalar& c, const Vector& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] += c * w[i];
  }
}

namespace {

std::optional<std::size_t> leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return std::nullopt;
}

void scale(Vector& v, const Scalar& c) {
  for (auto& s : v) {
    if (!s.is_zero()) s *= c;
  }
}

}  // namespace

EchelonBasis::EchelonBasis(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

void EchelonBasis::check_length(const Vector& v) const {
  if (v.size() != ambient_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                            std::to_string(ambient_));
  }
  for (const auto& s : v) {
    if (s.field() != field_) throw FieldMismatch();
  }
}

Vector EchelonBasis::reduce(Vector v) const {
  check_length(v);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto c = v[pivots_[r]];
    if (!c.is_zero()) add_scaled(v, -c, rows_[r]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const {
  return is_zero_vector(reduce(v));
}

bool EchelonBasis::insert(Vector v) {
  if (full()) {
    check_length(v);
    return false;
  }
  v = reduce(std::move(v));
  const auto lead = leading_index(v);
  if (!lead) return false;
  scale(v, v[*lead].inverse());
  for (auto& row : rows_) {
    const auto c = row[*lead];
    if (!c.is_zero()) add_scaled(row, -c, v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, *lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

CombinationSolver::CombinationSolver(Field field, std::size_t ambient, std::span<const Vector> generators)
    : field_(field), ambient_(ambient), count_(generators.size()) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != ambient_) throw DimensionMismatch("generator length mismatch");
    if (rows_.size() == ambient_) break;
    Vector v = generators[g];
    Vector combo = zero_vector(field_, count_);
    combo[g] = Scalar::one(field_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (!c.is_zero()) {
        add_scaled(v, -c, rows_[r]);
        add_scaled(combo, -c, combos_[r]);
      }
    }
    const auto lead = leading_index(v);
    if (!lead) continue;
    const auto inv = v[*lead].inverse();
    scale(v, inv);
    scale(combo, inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = rows_[r][*lead];
      if (!c.is_zero()) {
        add_scaled(rows_[r], -c, v);
        add_scaled(combos_[r], -c, combo);
      }
    }
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(*lead);
  }
}

std::optional<Vector> CombinationSolver::solve(const Vector& target) const {
  if (target.size() != ambient_) throw DimensionMismatch("target length mismatch");
  Vector rest = target;
  Vector coefficients = zero_vector(field_, count_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto c = rest[pivots_[r]];
    if (!c.is_zero()) {
      add_scaled(rest, -c, rows_[r]);
      add_scaled(coefficients, c, combos_[r]);
    }
  }
  if (!is_zero_vector(rest)) return std::nullopt;
  return coefficients;
}

std::vector<Vector> nullspace(Field field, std::size_t unknowns, std::span<const Vector> equations) {
  EchelonBasis system(field, unknowns);
  for (const auto& eq : equations) {
    if (system.full()) break;
    system.insert(eq);
  }
  const auto& pivots = system.pivots();
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (std::binary_search(pivots.begin(), pivots.end(), free)) continue;
    Vector v = zero_vector(field, unknowns);
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -system.rows()[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace starcheck
