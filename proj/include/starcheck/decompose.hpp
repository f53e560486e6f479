#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starcheck/algebra.hpp"

namespace starcheck {

enum class Tag { S, K, Scalar };

std::string_view to_string(Tag tag);
/// Throws UnknownId.
Tag parse_tag(std::string_view text);

struct Factor {
  Tag tag;
  Element value;
};

struct Monomial {
  std::vector<Factor> factors;

  /// Throws AlgebraError on an empty monomial.
  Element product() const;
};

enum class Scheme { s3, s2, k_plus_k2, k_plus_k2_k3 };

std::string_view to_string(Scheme scheme);
/// Throws UnknownId listing the known schemes.
Scheme parse_scheme(std::string_view text);

/// A target written as a sum of tagged monomials.
///
/// The first term is always the single-factor term (lambda for the S
/// schemes, the skew summand for the K schemes).
struct Certificate {
  Scheme scheme;
  Element target;
  Element x;
  Element y;
  /// Inverse of xy - yx (or xy + yx for k_plus_k2).
  Element z;
  std::vector<Monomial> terms;
  /// Number of pairs contributed by the xsy splitter (s2, k_plus_k2); 0 otherwise.
  std::size_t split_bound = 0;
};

struct Verdict {
  bool valid = true;
  /// "factor not symmetric", "factor not skew", "factor not scalar",
  /// "sum mismatch", "bound exceeded" or "malformed"; empty when valid.
  std::string violation;
  /// Where the violation was found, for humans.
  std::string detail;
};

Verdict verify_certificate(const Certificate& cert);

using Pairs = std::vector<std::pair<Element, Element>>;

/// Writes x s y as a bounded sum of products a_i b_i with prescribed factor types.
struct XsyDecomposer {
  std::string name;
  /// Upper bound on the number of pairs returned.
  std::size_t bound = 0;
  /// nullopt when x s y is outside the span of the admissible products.
  std::function<std::optional<Pairs>(const Element& s)> split;
};

/// Solves targets against the products left_i * right_j of two fixed bases.
/// Solutions are grouped by right factor, so at most right.size() pairs come back.
class ProductDictionary {
 public:
  ProductDictionary(const Algebra& algebra, std::vector<Element> left, std::vector<Element> right);

  std::optional<Pairs> split(const Element& target) const;
  std::size_t max_pairs() const noexcept { return right_.size(); }

 private:
  Algebra algebra_;
  std::vector<Element> left_;
  std::vector<Element> right_;
  std::shared_ptr<const CombinationSolver> solver_;
};

/// Pairs (a_i, b_i) of symmetric elements with sum a_i b_i = x s y, found by
/// an exact solve over the S-basis products. nullopt when x s y is not in S^2.
std::optional<Pairs> generic_xsy_s2(const Algebra& algebra, const Element& x, const Element& y, const Element& s);

/// Generic S^2 splitter with a dictionary shared across calls; bound dim(S).
XsyDecomposer generic_s2_decomposer(const Algebra& algebra, const Element& x, const Element& y);

/// Closed-form two-term split for M_2 transpose with x = e11 - e22 and
/// y = e12 + e21: x s y = (b e11 - b e22) 1 + (a e11 - d e22)(e12 + e21).
/// Throws AlgebraError for any other algebra or pair.
XsyDecomposer m2_transpose_decomposer(const Algebra& algebra, const Element& x, const Element& y);

/// The closed form where it applies, the generic splitter otherwise.
XsyDecomposer default_s2_decomposer(const Algebra& algebra, const Element& x, const Element& y);

/// Skew pairs with sum a_i b_i = x s y from the K-basis products; bound dim(K).
XsyDecomposer generic_k2_decomposer(const Algebra& algebra, const Element& x, const Element& y);

/// r = lambda + (kx - xk)y + (-x)(yk - ky) + s x y + x y s, with w = (zr)* = s + k
/// and lambda = -(wxy + yxw*). Throws WrongSymmetryType or NotInvertibleError.
Certificate decompose_s3(const Algebra& algebra, const Element& x, const Element& y, const Element& r);

/// r = lambda + (sx + xs)y + x(ys + sy) - 2 sum a_i b_i + (kx - xk)y + (-x)(yk - ky).
/// Throws DecompositionObstructed when the splitter cannot handle x s y.
Certificate decompose_s2(const Algebra& algebra, const Element& x, const Element& y, const Element& r,
                         const XsyDecomposer& decomposer);

/// k_plus_k2 needs xy + yx invertible and a splitter into K^2 (the generic
/// one is used when none is given); k_plus_k2_k3 needs xy - yx invertible.
Certificate decompose_k_chain(const Algebra& algebra, const Element& x, const Element& y, const Element& r,
                              Scheme scheme, const XsyDecomposer* decomposer = nullptr);

}  // namespace starcheck
