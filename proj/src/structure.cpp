#include "starcheck/structure.hpp"

#include <cctype>

namespace starcheck {

SkBases sk_bases(const Algebra& algebra) {
  std::vector<Element> sym;
  std::vector<Element> skew;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    auto [s, k] = sk_split(algebra.basis_element(i));
    sym.push_back(std::move(s));
    skew.push_back(std::move(k));
  }
  return {Subspace::span(algebra, sym), Subspace::span(algebra, skew)};
}

SetExpr SetExpr::atom(char name) {
  if (name != 'S' && name != 'K' && name != 'R' && name != 'Z') {
    throw ParseError(std::string("unknown set '") + name + "'", 0);
  }
  SetExpr e;
  e.kind_ = Kind::atom;
  e.name_ = name;
  return e;
}

SetExpr SetExpr::product(SetExpr a, SetExpr b) {
  SetExpr e;
  e.kind_ = Kind::product;
  e.children_ = {std::make_shared<const SetExpr>(std::move(a)), std::make_shared<const SetExpr>(std::move(b))};
  return e;
}

SetExpr SetExpr::jordan(SetExpr a, SetExpr b) {
  SetExpr e = product(std::move(a), std::move(b));
  e.kind_ = Kind::jordan;
  return e;
}

SetExpr SetExpr::sum(SetExpr a, SetExpr b) {
  SetExpr e = product(std::move(a), std::move(b));
  e.kind_ = Kind::sum;
  return e;
}

SetExpr SetExpr::power(SetExpr base, unsigned k) {
  if (k == 0) throw ParseError("exponent must be at least 1", 0);
  SetExpr e;
  e.kind_ = Kind::power;
  e.exponent_ = k;
  e.children_ = {std::make_shared<const SetExpr>(std::move(base))};
  return e;
}

std::string SetExpr::to_string() const {
  switch (kind_) {
    case Kind::atom:
      return std::string(1, name_);
    case Kind::product:
      return "(" + lhs().to_string() + " " + rhs().to_string() + ")";
    case Kind::jordan:
      return "(" + lhs().to_string() + " o " + rhs().to_string() + ")";
    case Kind::sum:
      return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Kind::power:
      return "(" + lhs().to_string() + ")^" + std::to_string(exponent_);
  }
  return "?";
}

namespace {

class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  SetExpr parse() {
    auto e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in set expression '" + std::string(text_) + "'", pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  SetExpr parse_sum() {
    auto e = parse_term();
    while (peek() == '+') {
      ++pos_;
      e = SetExpr::sum(std::move(e), parse_term());
    }
    return e;
  }

  static bool starts_atom(char c) { return c == 'S' || c == 'K' || c == 'R' || c == 'Z' || c == '('; }

  SetExpr parse_term() {
    auto e = parse_power();
    while (true) {
      const char c = peek();
      if (c == 'o') {
        ++pos_;
        e = SetExpr::jordan(std::move(e), parse_power());
      } else if (starts_atom(c)) {
        e = SetExpr::product(std::move(e), parse_power());
      } else {
        return e;
      }
    }
  }

  SetExpr parse_power() {
    auto e = parse_atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const auto start = pos_;
      unsigned k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (k > 64) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected exponent");
      if (k == 0) {
        pos_ = start;
        fail("exponent must be at least 1");
      }
      e = SetExpr::power(std::move(e), k);
    }
    return e;
  }

  SetExpr parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == 'S' || c == 'K' || c == 'R' || c == 'Z') {
      ++pos_;
      return SetExpr::atom(c);
    }
    fail(c == '\0' ? "unexpected end" : "expected S, K, R, Z or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SetExpr SetExpr::parse(std::string_view text) {
  return SetParser(text).parse();
}

ProbeResult commutativity_probe(const Algebra& algebra, const Subspace& set, ProbeMode mode) {
  if (mode == ProbeMode::mixed) return mixed_probe(algebra, set, set);
  const auto elems = set.elements(algebra);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::size_t first_j = mode == ProbeMode::commutative ? i + 1 : i;
    for (std::size_t j = first_j; j < elems.size(); ++j) {
      const auto& a = elems[i];
      const auto& b = elems[j];
      const auto value = mode == ProbeMode::commutative ? lie(a, b) : jordan(a, b);
      if (!value.is_zero()) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

ProbeResult mixed_probe(const Algebra& algebra, const Subspace& left, const Subspace& right) {
  const auto ls = left.elements(algebra);
  const auto rs = right.elements(algebra);
  for (const auto& a : ls) {
    for (const auto& b : rs) {
      if (!lie(a, b).is_zero()) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

StructureContext::StructureContext(Algebra algebra)
    : algebra_(algebra),
      s_(Subspace::zero(algebra.field(), algebra.dim())),
      k_(Subspace::zero(algebra.field(), algebra.dim())),
      r_(Subspace::full(algebra.field(), algebra.dim())) {
  auto bases = sk_bases(algebra_);
  s_ = std::move(bases.symmetric);
  k_ = std::move(bases.skew);
  s_elems_ = s_.elements(algebra_);
  k_elems_ = k_.elements(algebra_);
}

const Subspace& StructureContext::Z() {
  if (!z_) {
    std::vector<Element> all;
    for (std::size_t i = 0; i < algebra_.dim(); ++i) all.push_back(algebra_.basis_element(i));
    z_ = centralizer(algebra_, all);
  }
  return *z_;
}

const Subspace& StructureContext::cent_s() {
  if (!cent_s_) cent_s_ = centralizer(algebra_, s_elems_);
  return *cent_s_;
}

const Subspace& StructureContext::eval(const SetExpr& expr) {
  const auto key = expr.to_string();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Subspace result = Subspace::zero(algebra_.field(), algebra_.dim());
  switch (expr.kind()) {
    case SetExpr::Kind::atom:
      switch (expr.name()) {
        case 'S':
          result = s_;
          break;
        case 'K':
          result = k_;
          break;
        case 'R':
          result = r_;
          break;
        default:
          result = Z();
          break;
      }
      break;
    case SetExpr::Kind::product: {
      const auto a = eval(expr.lhs());
      result = product_span(algebra_, a, eval(expr.rhs()), ProductMode::product);
      break;
    }
    case SetExpr::Kind::jordan: {
      const auto a = eval(expr.lhs());
      result = product_span(algebra_, a, eval(expr.rhs()), ProductMode::jordan);
      break;
    }
    case SetExpr::Kind::sum: {
      const auto a = eval(expr.lhs());
      result = sum(a, eval(expr.rhs()));
      break;
    }
    case SetExpr::Kind::power: {
      const auto base = eval(expr.lhs());
      result = base;
      for (unsigned i = 1; i < expr.exponent(); ++i) result = product_span(algebra_, result, base);
      break;
    }
  }
  return cache_.emplace(key, std::move(result)).first->second;
}

std::size_t StructureContext::dim_over_center() {
  return algebra_.dim() / Z().dim();
}

bool StructureContext::s_commutative() {
  auto [it, inserted] = probes_.try_emplace(0, false);
  if (inserted) it->second = commutativity_probe(algebra_, s_, ProbeMode::commutative).holds;
  return it->second;
}

bool StructureContext::k_skew_commutative() {
  auto [it, inserted] = probes_.try_emplace(1, false);
  if (inserted) it->second = commutativity_probe(algebra_, k_, ProbeMode::skew_commutative).holds;
  return it->second;
}

bool StructureContext::k_commutative() {
  auto [it, inserted] = probes_.try_emplace(2, false);
  if (inserted) it->second = commutativity_probe(algebra_, k_, ProbeMode::commutative).holds;
  return it->second;
}

Subspace trace_zero(const Algebra& algebra) {
  if (algebra.is_quaternion()) throw Unsupported("trace is only defined on matrix algebras");
  std::vector<Element> gens;
  const auto n = algebra.n();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j) gens.push_back(algebra.matrix_unit(i, j));
    }
  }
  for (std::size_t i = 1; i < n; ++i) gens.push_back(algebra.matrix_unit(i, i) - algebra.matrix_unit(i + 1, i + 1));
  return Subspace::span(algebra, gens);
}

}  // namespace starcheck
