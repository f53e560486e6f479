#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "starcheck/algebra.hpp"

namespace starcheck {

enum class LetterType { general, symmetric, skew };

std::string_view to_string(LetterType type);

/// Typed letters, e.g. "sym a b c; skew x y; gen r u".
class Declarations {
 public:
  /// Throws ParseError with a 1-based column on unknown keywords, bad
  /// letters or duplicates.
  static Declarations parse(std::string_view text);

  /// Throws ParseError on duplicates.
  void declare(char letter, LetterType type);
  std::optional<LetterType> lookup(char letter) const;
  const std::map<char, LetterType>& letters() const noexcept { return letters_; }

  /// Canonical text such as "sym a b; skew x; gen r".
  std::string to_string() const;

 private:
  std::map<char, LetterType> letters_;
};

/// A letter occurrence inside a word. Only general letters ever carry a star.
struct Atom {
  char letter;
  bool starred;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using Word = std::vector<Atom>;

/// Shorter words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// A linear combination of words with nonzero rational coefficients.
class NormalForm {
 public:
  NormalForm() = default;
  static NormalForm constant(const mpq_class& value);
  static NormalForm letter(char name, LetterType type);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Word, mpq_class, WordLess>& terms() const noexcept { return terms_; }

  /// Adds c * word, dropping the entry if it cancels.
  void add(const Word& word, const mpq_class& c);

  NormalForm& operator+=(const NormalForm& other);
  NormalForm& operator-=(const NormalForm& other);
  NormalForm operator-() const;
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);

  /// Reverses each word and applies the letter rules: s* = s, k* = -k, g** = g.
  NormalForm star(const Declarations& decls) const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  /// "2 a b - 1/2 r* x"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<Word, mpq_class, WordLess> terms_;
};

/// Parsed *-polynomial. Products are juxtaposition, a postfix '*' is the
/// involution, and coefficients are integers or fractions p/q.
class StarExpr {
 public:
  enum class Kind { letter, number, sum, product, negate, star };

  /// Throws ParseError with the 1-based column of the offending character.
  static StarExpr parse(std::string_view text, const Declarations& decls);

  Kind kind() const noexcept { return node_->kind; }
  const Declarations& declarations() const noexcept { return *decls_; }
  std::size_t arity() const noexcept { return node_->children.size(); }
  StarExpr child(std::size_t i) const { return StarExpr(node_->children.at(i), decls_); }
  char letter() const noexcept { return node_->letter; }
  const mpq_class& number() const noexcept { return node_->number; }

  /// Fully parenthesised rendering of the tree.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    char letter = 0;
    mpq_class number;
    std::vector<std::shared_ptr<const Node>> children;
  };

  StarExpr(std::shared_ptr<const Node> node, std::shared_ptr<const Declarations> decls)
      : node_(std::move(node)), decls_(std::move(decls)) {}

  friend class StarParser;

  std::shared_ptr<const Node> node_;
  std::shared_ptr<const Declarations> decls_;
};

NormalForm normalize(const StarExpr& expr);

struct IdentityResult {
  bool holds;
  /// normalize(lhs - rhs); zero when the identity holds.
  NormalForm difference;
};

/// Throws Error when the two sides were parsed under different declarations.
IdentityResult check_identity(const StarExpr& lhs, const StarExpr& rhs);

/// The zero polynomial is reported as symmetric.
enum class SymmetryClass { symmetric, skew, neither };

std::string_view to_string(SymmetryClass c);
/// Accepts "symmetric", "skew" and "neither"; throws UnknownId otherwise.
SymmetryClass parse_symmetry_class(std::string_view text);

SymmetryClass classify_symmetry(const StarExpr& expr);

/// Substitutes concrete elements for the letters. Throws AlgebraError for
/// unassigned letters and DivisionByZero when a coefficient's denominator
/// vanishes in the field.
Element evaluate(const StarExpr& expr, const Algebra& algebra, const std::map<char, Element>& assignment);

/// Random elements of the declared types, one per letter.
std::map<char, Element> random_assignment(const Declarations& decls, const Algebra& algebra, std::mt19937_64& rng);

/// One block of an identity corpus:
///
///   [name]
///   # free-form comment
///   sym x y; gen r
///   r x y + y x r* is symmetric
///   r x y + x y r* = (r x y + y x r*) + (x y - y x) r*
///
/// The declarations line comes first; every further line is either an
/// identity "lhs = rhs" or a claim "expr is symmetric|skew|neither".
struct CorpusClaim {
  enum class Kind { identity, symmetry };
  Kind kind;
  std::size_t line;
  std::string text;
  StarExpr lhs;
  /// Set for identities.
  std::optional<StarExpr> rhs;
  /// Set for symmetry claims.
  std::optional<SymmetryClass> expected;
};

struct CorpusEntry {
  std::string name;
  std::size_t line;
  std::vector<std::string> comments;
  Declarations declarations;
  std::vector<CorpusClaim> claims;
};

/// Throws ParseError whose message starts with "<source>:<line>:".
std::vector<CorpusEntry> parse_corpus(std::string_view text, std::string_view source = "<corpus>");

struct ClaimVerdict {
  bool holds;
  /// The nonzero difference for a failed identity, or the actual class.
  std::string detail;
};

ClaimVerdict check_claim(const CorpusClaim& claim);

/// Checks a claim on one concrete instantiation. For identities this compares
/// both sides; for symmetry claims it applies the involution to the value
/// ("neither" holds when the value is neither symmetric nor skew).
bool check_claim_instance(const CorpusClaim& claim, const std::map<char, Element>& assignment,
                          const Algebra& algebra);

}  // namespace starcheck
