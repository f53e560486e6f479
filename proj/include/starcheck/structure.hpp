#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starcheck/algebra.hpp"
#include "starcheck/subspace.hpp"

namespace starcheck {

struct SkBases {
  Subspace symmetric;
  Subspace skew;
};

/// Eigenspaces of the involution for +1 and -1.
SkBases sk_bases(const Algebra& algebra);

/// Set expressions over the atoms S, K, R and Z.
///
/// Grammar (juxtaposition and `o` bind tighter than `+`, both left-assoc):
///   sum    := term ('+' term)*
///   term   := power (('o')? power)*
///   power  := atom ('^' k)?          k >= 1
///   atom   := 'S' | 'K' | 'R' | 'Z' | '(' sum ')'
class SetExpr {
 public:
  enum class Kind { atom, product, jordan, sum, power };

  static SetExpr atom(char name);
  static SetExpr product(SetExpr a, SetExpr b);
  static SetExpr jordan(SetExpr a, SetExpr b);
  static SetExpr sum(SetExpr a, SetExpr b);
  /// Throws ParseError for k == 0.
  static SetExpr power(SetExpr base, unsigned k);

  /// Throws ParseError with the offending column.
  static SetExpr parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  char name() const noexcept { return name_; }
  unsigned exponent() const noexcept { return exponent_; }
  const SetExpr& lhs() const { return *children_.at(0); }
  const SetExpr& rhs() const { return *children_.at(1); }

  /// Fully parenthesised canonical text, used as the cache key.
  std::string to_string() const;

 private:
  SetExpr() = default;

  Kind kind_ = Kind::atom;
  char name_ = 'R';
  unsigned exponent_ = 1;
  std::vector<std::shared_ptr<const SetExpr>> children_;
};

enum class ProbeMode {
  /// ab = ba on all basis pairs of one set
  commutative,
  /// ab = -ba on all basis pairs (including a = b) of one set
  skew_commutative,
  /// sk = ks for s from the first set, k from the second
  mixed,
};

struct ProbeResult {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
};

/// Checks the law on basis pairs, which suffices by bilinearity.
ProbeResult commutativity_probe(const Algebra& algebra, const Subspace& set, ProbeMode mode);
ProbeResult mixed_probe(const Algebra& algebra, const Subspace& left, const Subspace& right);

/// An algebra together with memoised subspaces derived from it.
///
/// Not thread-safe; use one context per thread.
class StructureContext {
 public:
  explicit StructureContext(Algebra algebra);

  const Algebra& algebra() const noexcept { return algebra_; }
  const Subspace& S() const noexcept { return s_; }
  const Subspace& K() const noexcept { return k_; }
  const Subspace& R() const noexcept { return r_; }
  /// The center, computed as the centralizer of the whole algebra.
  const Subspace& Z();

  const std::vector<Element>& s_basis() const noexcept { return s_elems_; }
  const std::vector<Element>& k_basis() const noexcept { return k_elems_; }

  const Subspace& eval(const SetExpr& expr);
  const Subspace& eval(std::string_view text) { return eval(SetExpr::parse(text)); }

  /// dim_F R / dim_F Z(R).
  std::size_t dim_over_center();

  bool s_commutative();
  bool k_skew_commutative();
  bool k_commutative();

  /// Cent(S), the centralizer of the symmetric elements.
  const Subspace& cent_s();

 private:
  Algebra algebra_;
  Subspace s_;
  Subspace k_;
  Subspace r_;
  std::vector<Element> s_elems_;
  std::vector<Element> k_elems_;
  std::optional<Subspace> z_;
  std::optional<Subspace> cent_s_;
  std::map<std::string, Subspace> cache_;
  std::map<int, bool> probes_;
};

/// The matrices of trace zero, as a subspace of M_n(F).
Subspace trace_zero(const Algebra& algebra);

}  // namespace starcheck
