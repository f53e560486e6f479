#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starcheck/algebra.hpp"
#include "starcheck/structure.hpp"

namespace starcheck {

/// Witness-style conditions on a pair (x, y).
///
///   first   x,y in S   xy-yx != 0          xSy in S^2
///   second  x,y in S   xy+yx != 0          xKy in S^2
///   a       x,y in K   xy+yx != 0          xSy in KS+K^2
///   b       K x S      xy-yx != 0          xSy in KS+K^2   (S x K: SK+K^2)
///   c       K x S      xy-yx != 0          xSy in KS       (S x K: SK)
///   d       x,y in K   xy+yx invertible    xSy in K^2
///   e       x,y in K   xy-yx invertible    (none)
///   e_k3    x,y in K   xy-yx != 0          K^2 in K+K^3
///   f       x in S, y in K   xy-yx != 0    xSy in SK
///   g       x,y in S   xy-yx != 0          xKy in KS+SK
///   h_s3    x,y in S   xy-yx invertible    (none)
///   h_s2    x,y in S   xy-yx invertible    xSy in S^2
enum class CriterionId { first, second, a, b, c, d, e, e_k3, f, g, h_s3, h_s2 };

std::string_view to_string(CriterionId id);
/// Throws UnknownId listing the known ids.
CriterionId parse_criterion(std::string_view text);
const std::vector<CriterionId>& all_criteria();

struct MembershipCheck {
  /// The basis element (or product of basis elements) being pushed through.
  Element generator;
  /// x * generator * y, or the product itself for e_k3.
  Element value;
  bool contained;
};

struct CriterionOutcome {
  CriterionId criterion;
  Element x;
  Element y;
  /// "lie" (xy-yx) or "jordan" (xy+yx).
  std::string combination;
  Element combination_value;
  bool nonzero;
  /// Set only for criteria that demand invertibility.
  std::optional<bool> invertible;
  /// Set expression that the memberships target, or empty.
  std::string target;
  /// "S", "K", "KxK" or empty.
  std::string quantified_over;
  std::vector<MembershipCheck> memberships;
  /// Memberships are checked on a basis only; linearity covers the rest.
  bool basis_quantified = true;
  /// For a and b: whether the memberships already land in K^2.
  std::optional<bool> within_k2;
  bool pass;
};

/// Throws WrongSymmetryType when x or y has the wrong type for `id`.
CriterionOutcome check_criterion(StructureContext& ctx, CriterionId id, const Element& x, const Element& y);

inline CriterionOutcome check_first_criterion(StructureContext& ctx, const Element& x, const Element& y) {
  return check_criterion(ctx, CriterionId::first, x, y);
}
inline CriterionOutcome check_second_criterion(StructureContext& ctx, const Element& x, const Element& y) {
  return check_criterion(ctx, CriterionId::second, x, y);
}

struct PaperWitness {
  Element x;
  Element y;
  /// The checker this pair is meant to satisfy.
  CriterionId criterion;
};

/// Names: s3_transpose_even, s3_symplectic, s2_transpose, s2_symplectic,
/// crit2_transpose, crit2_symplectic, ks_k2_transpose, ks_k2_symplectic,
/// ks_k2_v2_transpose, ks_k2_v2_symplectic, k_k2_symplectic_m2.
///
/// Throws UnknownId for unknown names and AlgebraError when the algebra
/// (involution or size) does not fit the construction.
PaperWitness paper_witness(std::string_view name, const Algebra& algebra);
const std::vector<std::string>& paper_witness_names();

struct SearchBudget {
  enum class Pool { basis, pairs };
  Pool pool = Pool::pairs;
  /// Upper bound on candidate pairs tried; 0 means no bound.
  std::size_t max_pairs = 0;
};

struct SearchResult {
  std::optional<CriterionOutcome> outcome;
  std::size_t tried = 0;
  bool found() const { return outcome.has_value(); }
};

/// First passing (x, y) in a fixed lexicographic enumeration of the candidate
/// pool: basis elements, then b_i + b_j and b_i - b_j for i < j.
/// The second criterion also tries x = y = 1 once the pool is exhausted.
SearchResult witness_search(StructureContext& ctx, CriterionId id, SearchBudget budget = {});

/// The candidate pool for one symmetry type, in enumeration order.
std::vector<Element> candidate_pool(const std::vector<Element>& basis, SearchBudget::Pool pool);

}  // namespace starcheck
