#include "starcheck/decompose.hpp"

#include <array>

#include "starcheck/errors.hpp"
#include "starcheck/structure.hpp"

namespace starcheck {

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::S:
      return "S";
    case Tag::K:
      return "K";
    case Tag::Scalar:
      return "Scalar";
  }
  return "?";
}

Tag parse_tag(std::string_view text) {
  if (text == "S") return Tag::S;
  if (text == "K") return Tag::K;
  if (text == "Scalar") return Tag::Scalar;
  throw UnknownId("unknown tag '" + std::string(text) + "' (known: S, K, Scalar)");
}

Element Monomial::product() const {
  if (factors.empty()) throw AlgebraError("empty monomial");
  Element out = factors.front().value;
  for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i].value;
  return out;
}

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 4> kSchemes = {{
    {Scheme::s3, "s3"},
    {Scheme::s2, "s2"},
    {Scheme::k_plus_k2, "k_plus_k2"},
    {Scheme::k_plus_k2_k3, "k_plus_k2_k3"},
}};

bool is_scalar(const Element& e) {
  const auto& one = e.algebra().one();
  for (std::size_t i = 0; i < one.coords().size(); ++i) {
    if (!one[i].is_zero()) return e == e[i] * one;
  }
  return false;
}

std::optional<std::string> tag_violation(const Factor& f) {
  switch (f.tag) {
    case Tag::S:
      if (!f.value.is_symmetric()) return "factor not symmetric";
      break;
    case Tag::K:
      if (!f.value.is_skew()) return "factor not skew";
      break;
    case Tag::Scalar:
      if (!is_scalar(f.value)) return "factor not scalar";
      break;
  }
  return std::nullopt;
}

// Allowed term lengths, in order, for the schemes with a fixed shape.
std::optional<std::vector<std::size_t>> fixed_shape(Scheme scheme) {
  switch (scheme) {
    case Scheme::s3:
      return std::vector<std::size_t>{1, 2, 2, 3, 3};
    case Scheme::k_plus_k2_k3:
      return std::vector<std::size_t>{1, 2, 2, 3};
    default:
      return std::nullopt;
  }
}

Tag scheme_tag(Scheme scheme) {
  return scheme == Scheme::s3 || scheme == Scheme::s2 ? Tag::S : Tag::K;
}

std::optional<std::string> bound_violation(const Certificate& cert) {
  const auto& terms = cert.terms;
  if (auto shape = fixed_shape(cert.scheme)) {
    if (terms.size() != shape->size()) {
      return "expected " + std::to_string(shape->size()) + " terms, got " + std::to_string(terms.size());
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].factors.size() != (*shape)[i]) {
        return "term " + std::to_string(i + 1) + " has " + std::to_string(terms[i].factors.size()) +
               " factors, expected " + std::to_string((*shape)[i]);
      }
    }
    return std::nullopt;
  }
  // s2 allows split_bound + 4 products, k_plus_k2 split_bound + 2.
  const std::size_t extra = cert.scheme == Scheme::s2 ? 4 : 2;
  const std::size_t limit = 1 + cert.split_bound + extra;
  if (terms.empty() || terms.size() > limit) {
    return "expected between 1 and " + std::to_string(limit) + " terms, got " + std::to_string(terms.size());
  }
  if (terms.front().factors.size() != 1) return "first term must have a single factor";
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].factors.size() != 2) return "term " + std::to_string(i + 1) + " must have two factors";
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  for (const auto& [s, name] : kSchemes) {
    if (s == scheme) return name;
  }
  return "?";
}

Scheme parse_scheme(std::string_view text) {
  for (const auto& [s, name] : kSchemes) {
    if (name == text) return s;
  }
  throw UnknownId("unknown scheme '" + std::string(text) + "' (known: s3, s2, k_plus_k2, k_plus_k2_k3)");
}

Verdict verify_certificate(const Certificate& cert) {
  const auto& alg = cert.target.algebra();
  auto fail = [](std::string violation, std::string detail) { return Verdict{false, std::move(violation), std::move(detail)}; };

  for (const auto* e : {&cert.x, &cert.y, &cert.z}) {
    if (e->algebra() != alg) return fail("malformed", "witness outside " + alg.describe());
  }
  const Tag expected = scheme_tag(cert.scheme);
  Element total = alg.zero();
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const auto& term = cert.terms[i];
    if (term.factors.empty() || term.factors.size() > 3) {
      return fail("malformed", "term " + std::to_string(i + 1) + " has " + std::to_string(term.factors.size()) +
                                   " factors");
    }
    for (std::size_t j = 0; j < term.factors.size(); ++j) {
      const auto& f = term.factors[j];
      const auto where = "term " + std::to_string(i + 1) + ", factor " + std::to_string(j + 1);
      if (f.value.algebra() != alg) return fail("malformed", where + " lives outside " + alg.describe());
      if (auto v = tag_violation(f)) return fail(*v, where + ": " + f.value.to_string());
      if (f.tag != expected && f.tag != Tag::Scalar) {
        return fail("malformed", where + " is tagged " + std::string(to_string(f.tag)) + " in scheme " +
                                     std::string(to_string(cert.scheme)));
      }
    }
    total += term.product();
  }
  if (total != cert.target) {
    return fail("sum mismatch", "terms sum to " + total.to_string() + ", target is " + cert.target.to_string());
  }
  if (auto b = bound_violation(cert)) return fail("bound exceeded", *b);
  return {};
}

ProductDictionary::ProductDictionary(const Algebra& algebra, std::vector<Element> left, std::vector<Element> right)
    : algebra_(algebra), left_(std::move(left)), right_(std::move(right)) {
  std::vector<Vector> products;
  products.reserve(left_.size() * right_.size());
  for (const auto& a : left_) {
    for (const auto& b : right_) products.push_back((a * b).coords());
  }
  solver_ = std::make_shared<const CombinationSolver>(algebra_.field(), algebra_.dim(), products);
}

std::optional<Pairs> ProductDictionary::split(const Element& target) const {
  auto coeffs = solver_->solve(target.coords());
  if (!coeffs) return std::nullopt;
  Pairs out;
  for (std::size_t j = 0; j < right_.size(); ++j) {
    Element a = algebra_.zero();
    for (std::size_t i = 0; i < left_.size(); ++i) {
      const auto& c = (*coeffs)[i * right_.size() + j];
      if (!c.is_zero()) a += c * left_[i];
    }
    if (!a.is_zero()) out.emplace_back(std::move(a), right_[j]);
  }
  return out;
}

namespace {

void require_type(const Element& e, bool symmetric, const char* what) {
  if (symmetric ? !e.is_symmetric() : !e.is_skew()) {
    throw WrongSymmetryType(std::string(what) + " must be " + (symmetric ? "symmetric" : "skew") + ", got " +
                            e.to_string());
  }
}

void require_member(const Algebra& alg, const Element& e, const char* what) {
  if (e.algebra() != alg) throw AlgebraError(std::string(what) + " does not belong to " + alg.describe());
}

Element inverse_of(const Element& a, const char* what) {
  auto z = right_inverse(a);
  if (!z) throw NotInvertibleError(std::string(what) + " = " + a.to_string() + " is not invertible");
  return *z;
}

XsyDecomposer dictionary_decomposer(std::string name, const Algebra& alg, const Element& x, const Element& y,
                                    std::vector<Element> basis) {
  auto dict = std::make_shared<const ProductDictionary>(alg, basis, basis);
  const auto bound = dict->max_pairs();
  return {std::move(name), bound, [dict, x, y](const Element& s) { return dict->split(x * s * y); }};
}

Monomial mono(Tag tag, std::initializer_list<Element> factors) {
  Monomial m;
  for (const auto& f : factors) m.factors.push_back({tag, f});
  return m;
}

}  // namespace

std::optional<Pairs> generic_xsy_s2(const Algebra& algebra, const Element& x, const Element& y, const Element& s) {
  for (const auto* e : {&x, &y, &s}) {
    require_member(algebra, *e, "argument");
    require_type(*e, true, "argument");
  }
  const auto basis = sk_bases(algebra).symmetric.elements(algebra);
  return ProductDictionary(algebra, basis, basis).split(x * s * y);
}

XsyDecomposer generic_s2_decomposer(const Algebra& algebra, const Element& x, const Element& y) {
  return dictionary_decomposer("generic_s2", algebra, x, y, sk_bases(algebra).symmetric.elements(algebra));
}

XsyDecomposer generic_k2_decomposer(const Algebra& algebra, const Element& x, const Element& y) {
  return dictionary_decomposer("generic_k2", algebra, x, y, sk_bases(algebra).skew.elements(algebra));
}

XsyDecomposer m2_transpose_decomposer(const Algebra& algebra, const Element& x, const Element& y) {
  const bool fits = algebra.is_matrix() && algebra.n() == 2 && algebra.involution() == Involution::transpose &&
                    x == algebra.matrix_unit(1, 1) - algebra.matrix_unit(2, 2) &&
                    y == algebra.matrix_unit(1, 2) + algebra.matrix_unit(2, 1);
  if (!fits) throw AlgebraError("the closed-form split needs M_2 transpose with x = e11 - e22, y = e12 + e21");
  return {"m2_transpose", 2, [algebra](const Element& s) -> std::optional<Pairs> {
            const auto e11 = algebra.matrix_unit(1, 1);
            const auto e22 = algebra.matrix_unit(2, 2);
            const auto& a = s.entry(1, 1);
            const auto& b = s.entry(1, 2);
            const auto& d = s.entry(2, 2);
            return Pairs{{b * e11 - b * e22, algebra.one()},
                         {a * e11 - d * e22, algebra.matrix_unit(1, 2) + algebra.matrix_unit(2, 1)}};
          }};
}

XsyDecomposer default_s2_decomposer(const Algebra& algebra, const Element& x, const Element& y) {
  try {
    return m2_transpose_decomposer(algebra, x, y);
  } catch (const AlgebraError&) {
    return generic_s2_decomposer(algebra, x, y);
  }
}

Certificate decompose_s3(const Algebra& algebra, const Element& x, const Element& y, const Element& r) {
  for (const auto* e : {&x, &y, &r}) require_member(algebra, *e, "argument");
  require_type(x, true, "x");
  require_type(y, true, "y");
  const auto z = inverse_of(lie(x, y), "xy - yx");

  const auto w = (z * r).star();
  const auto [s, k] = sk_split(w);
  const auto lambda = -(w * x * y + y * x * w.star());

  Certificate cert{Scheme::s3, r, x, y, z, {}, 0};
  cert.terms.push_back(mono(Tag::S, {lambda}));
  cert.terms.push_back(mono(Tag::S, {lie(k, x), y}));
  cert.terms.push_back(mono(Tag::S, {-x, lie(y, k)}));
  cert.terms.push_back(mono(Tag::S, {s, x, y}));
  cert.terms.push_back(mono(Tag::S, {x, y, s}));
  return cert;
}

Certificate decompose_s2(const Algebra& algebra, const Element& x, const Element& y, const Element& r,
                         const XsyDecomposer& decomposer) {
  for (const auto* e : {&x, &y, &r}) require_member(algebra, *e, "argument");
  require_type(x, true, "x");
  require_type(y, true, "y");
  const auto z = inverse_of(lie(x, y), "xy - yx");

  const auto w = (z * r).star();
  const auto [s, k] = sk_split(w);
  const auto lambda = -(w * x * y + y * x * w.star());

  auto pairs = decomposer.split(s);
  if (!pairs) {
    throw DecompositionObstructed("x s y is not in S^2 for s = " + s.to_string() + " (splitter " + decomposer.name +
                                  ")");
  }
  if (pairs->size() > decomposer.bound) {
    throw DecompositionObstructed("splitter " + decomposer.name + " returned " + std::to_string(pairs->size()) +
                                  " pairs, more than its bound " + std::to_string(decomposer.bound));
  }
  const auto minus_two = Scalar::from_int(algebra.field(), -2);

  Certificate cert{Scheme::s2, r, x, y, z, {}, decomposer.bound};
  cert.terms.push_back(mono(Tag::S, {lambda}));
  cert.terms.push_back(mono(Tag::S, {jordan(s, x), y}));
  cert.terms.push_back(mono(Tag::S, {x, jordan(y, s)}));
  for (const auto& [a, b] : *pairs) cert.terms.push_back(mono(Tag::S, {minus_two * a, b}));
  cert.terms.push_back(mono(Tag::S, {lie(k, x), y}));
  cert.terms.push_back(mono(Tag::S, {-x, lie(y, k)}));
  return cert;
}

Certificate decompose_k_chain(const Algebra& algebra, const Element& x, const Element& y, const Element& r,
                              Scheme scheme, const XsyDecomposer* decomposer) {
  for (const auto* e : {&x, &y, &r}) require_member(algebra, *e, "argument");
  require_type(x, false, "x");
  require_type(y, false, "y");

  if (scheme == Scheme::k_plus_k2) {
    const auto z = inverse_of(jordan(x, y), "xy + yx");
    const auto w = (z * r).star();
    const auto ws = w.star();
    std::optional<XsyDecomposer> fallback;
    if (!decomposer) decomposer = &fallback.emplace(generic_k2_decomposer(algebra, x, y));

    const auto sym = w + ws;
    auto pairs = decomposer->split(sym);
    if (!pairs) {
      throw DecompositionObstructed("x s y is not in K^2 for s = " + sym.to_string() + " (splitter " +
                                    decomposer->name + ")");
    }
    if (pairs->size() > decomposer->bound) {
      throw DecompositionObstructed("splitter " + decomposer->name + " exceeded its bound");
    }
    // r = (wx + xw*)y + x(yw* + wy) - x(w + w*)y - (wxy - yxw*)
    Certificate cert{scheme, r, x, y, z, {}, decomposer->bound};
    cert.terms.push_back(mono(Tag::K, {-(w * x * y - y * x * ws)}));
    cert.terms.push_back(mono(Tag::K, {w * x + x * ws, y}));
    cert.terms.push_back(mono(Tag::K, {x, y * ws + w * y}));
    for (const auto& [a, b] : *pairs) cert.terms.push_back(mono(Tag::K, {-a, b}));
    return cert;
  }
  if (scheme == Scheme::k_plus_k2_k3) {
    const auto z = inverse_of(lie(x, y), "xy - yx");
    const auto w = (z * r).star();
    const auto ws = w.star();
    // r = (wxy - yxw*) - (wx + xw*)y + x(yw* + wy) + x(w* - w)y
    Certificate cert{scheme, r, x, y, z, {}, 0};
    cert.terms.push_back(mono(Tag::K, {w * x * y - y * x * ws}));
    cert.terms.push_back(mono(Tag::K, {-(w * x + x * ws), y}));
    cert.terms.push_back(mono(Tag::K, {x, y * ws + w * y}));
    cert.terms.push_back(mono(Tag::K, {x, ws - w, y}));
    return cert;
  }
  throw UnknownId("scheme " + std::string(to_string(scheme)) + " is not a K-side scheme");
}

}  // namespace starcheck
