#include "starcheck/criteria.hpp"

#include <array>

namespace starcheck {

namespace {

enum class Type { S, K };
enum class Combination { lie, jordan };
enum class Quantifier { none, S, K, KxK };

struct Shape {
  Type x;
  Type y;
  Combination combination;
  bool invertible;
  Quantifier quantifier;
};

struct Entry {
  CriterionId id;
  std::string_view name;
};

constexpr std::array<Entry, 12> kNames = {{
    {CriterionId::first, "first"},
    {CriterionId::second, "second"},
    {CriterionId::a, "a"},
    {CriterionId::b, "b"},
    {CriterionId::c, "c"},
    {CriterionId::d, "d"},
    {CriterionId::e, "e"},
    {CriterionId::e_k3, "e_k3"},
    {CriterionId::f, "f"},
    {CriterionId::g, "g"},
    {CriterionId::h_s3, "h_s3"},
    {CriterionId::h_s2, "h_s2"},
}};

bool orientation_free(CriterionId id) {
  return id == CriterionId::b || id == CriterionId::c;
}

// For b and c this is the K x S orientation; S x K is the mirror image.
Shape shape_of(CriterionId id) {
  using C = Combination;
  using Q = Quantifier;
  switch (id) {
    case CriterionId::first:
      return {Type::S, Type::S, C::lie, false, Q::S};
    case CriterionId::second:
      return {Type::S, Type::S, C::jordan, false, Q::K};
    case CriterionId::a:
      return {Type::K, Type::K, C::jordan, false, Q::S};
    case CriterionId::b:
    case CriterionId::c:
      return {Type::K, Type::S, C::lie, false, Q::S};
    case CriterionId::d:
      return {Type::K, Type::K, C::jordan, true, Q::S};
    case CriterionId::e:
      return {Type::K, Type::K, C::lie, true, Q::none};
    case CriterionId::e_k3:
      return {Type::K, Type::K, C::lie, false, Q::KxK};
    case CriterionId::f:
      return {Type::S, Type::K, C::lie, false, Q::S};
    case CriterionId::g:
      return {Type::S, Type::S, C::lie, false, Q::K};
    case CriterionId::h_s3:
      return {Type::S, Type::S, C::lie, true, Q::none};
    case CriterionId::h_s2:
      return {Type::S, Type::S, C::lie, true, Q::S};
  }
  throw UnknownId("criterion");
}

std::string target_of(CriterionId id, bool x_symmetric) {
  switch (id) {
    case CriterionId::first:
    case CriterionId::second:
    case CriterionId::h_s2:
      return "S^2";
    case CriterionId::a:
      return "KS+K^2";
    case CriterionId::b:
      return x_symmetric ? "SK+K^2" : "KS+K^2";
    case CriterionId::c:
      return x_symmetric ? "SK" : "KS";
    case CriterionId::d:
      return "K^2";
    case CriterionId::e_k3:
      return "K+K^3";
    case CriterionId::f:
      return "SK";
    case CriterionId::g:
      return "KS+SK";
    case CriterionId::e:
    case CriterionId::h_s3:
      return "";
  }
  return "";
}

bool has_type(const Element& e, Type t) {
  return t == Type::S ? e.is_symmetric() : e.is_skew();
}

const char* type_name(Type t) {
  return t == Type::S ? "symmetric" : "skew";
}

// Resolves the orientation of b and c from the types of x and y.
Shape validate(CriterionId id, const Element& x, const Element& y) {
  Shape shape = shape_of(id);
  if (orientation_free(id) && x.is_symmetric() && y.is_skew()) std::swap(shape.x, shape.y);
  auto require = [&](const Element& e, Type t, const char* which) {
    if (!has_type(e, t)) {
      throw WrongSymmetryType(std::string("criterion ") + std::string(to_string(id)) + " needs " + which + " " +
                              type_name(t) + ", got " + e.to_string());
    }
  };
  require(x, shape.x, "x");
  require(y, shape.y, "y");
  return shape;
}

// `test`, when given, must decide membership in the outcome's target.
CriterionOutcome evaluate(StructureContext& ctx, CriterionId id, const Element& x, const Element& y, bool stop_early,
                          const MembershipTest* test = nullptr) {
  if (x.algebra() != ctx.algebra() || y.algebra() != ctx.algebra()) {
    throw AlgebraError("witness does not belong to " + ctx.algebra().describe());
  }
  const Shape shape = validate(id, x, y);
  const bool lie_form = shape.combination == Combination::lie;
  const auto value = lie_form ? lie(x, y) : jordan(x, y);

  CriterionOutcome out{id,
                       x,
                       y,
                       lie_form ? "lie" : "jordan",
                       value,
                       !value.is_zero(),
                       std::nullopt,
                       target_of(id, shape.x == Type::S),
                       "",
                       {},
                       true,
                       std::nullopt,
                       false};
  bool ok = out.nonzero;
  if (shape.invertible) {
    out.invertible = out.nonzero && is_invertible(value);
    ok = *out.invertible;
  }
  if (stop_early && !ok) return out;

  const bool track_k2 = id == CriterionId::a || id == CriterionId::b;
  const Subspace* k2 = track_k2 ? &ctx.eval("K^2") : nullptr;
  if (track_k2) out.within_k2 = true;

  if (shape.quantifier != Quantifier::none) {
    const auto& target = ctx.eval(out.target);
    auto record = [&](const Element& generator, Element image) {
      const bool inside = test ? test->contains(image) : target.contains(image);
      if (k2 && !k2->contains(image)) out.within_k2 = false;
      ok = ok && inside;
      out.memberships.push_back({generator, std::move(image), inside});
    };
    switch (shape.quantifier) {
      case Quantifier::S:
        out.quantified_over = "S";
        for (const auto& s : ctx.s_basis()) {
          record(s, x * s * y);
          if (stop_early && !ok) break;
        }
        break;
      case Quantifier::K:
        out.quantified_over = "K";
        for (const auto& k : ctx.k_basis()) {
          record(k, x * k * y);
          if (stop_early && !ok) break;
        }
        break;
      case Quantifier::KxK:
        out.quantified_over = "KxK";
        for (const auto& a : ctx.k_basis()) {
          for (const auto& b : ctx.k_basis()) {
            record(a * b, a * b);
            if (stop_early && !ok) break;
          }
          if (stop_early && !ok) break;
        }
        break;
      case Quantifier::none:
        break;
    }
  }
  out.pass = ok;
  return out;
}

}  // namespace

std::string_view to_string(CriterionId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "?";
}

CriterionId parse_criterion(std::string_view text) {
  for (const auto& e : kNames) {
    if (e.name == text) return e.id;
  }
  std::string known;
  for (const auto& e : kNames) known += (known.empty() ? "" : ", ") + std::string(e.name);
  throw UnknownId("unknown criterion '" + std::string(text) + "' (known: " + known + ")");
}

const std::vector<CriterionId>& all_criteria() {
  static const std::vector<CriterionId> ids = [] {
    std::vector<CriterionId> v;
    for (const auto& e : kNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

CriterionOutcome check_criterion(StructureContext& ctx, CriterionId id, const Element& x, const Element& y) {
  return evaluate(ctx, id, x, y, false);
}

namespace {

void require_matrices(const Algebra& alg, Involution inv, std::string_view name) {
  if (!alg.is_matrix() || alg.involution() != inv) {
    throw AlgebraError("witness " + std::string(name) + " needs M_n with the " + std::string(to_string(inv)) +
                       " involution, got " + alg.describe());
  }
}

void require_size(bool ok, std::string_view name, const Algebra& alg, const char* condition) {
  if (!ok) {
    throw AlgebraError("witness " + std::string(name) + " needs " + condition + ", got n = " + std::to_string(alg.n()));
  }
}

}  // namespace

const std::vector<std::string>& paper_witness_names() {
  static const std::vector<std::string> names = {
      "s3_transpose_even",  "s3_symplectic",      "s2_transpose",        "s2_symplectic",
      "crit2_transpose",    "crit2_symplectic",   "ks_k2_transpose",     "ks_k2_symplectic",
      "ks_k2_v2_transpose", "ks_k2_v2_symplectic", "k_k2_symplectic_m2",
  };
  return names;
}

PaperWitness paper_witness(std::string_view name, const Algebra& alg) {
  const auto n = alg.n();
  const auto m = n / 2;
  auto e = [&](std::size_t i, std::size_t j) { return alg.matrix_unit(i, j); };

  if (name == "s3_transpose_even") {
    require_matrices(alg, Involution::transpose, name);
    require_size(n >= 2 && n % 2 == 0, name, alg, "even n");
    Element x = alg.zero();
    Element y = alg.zero();
    for (std::size_t i = 1; i < n; i += 2) {
      x += e(i, i) - e(i + 1, i + 1);
      y += e(i, i + 1) + e(i + 1, i);
    }
    return {x, y, CriterionId::h_s3};
  }
  if (name == "s3_symplectic") {
    require_matrices(alg, Involution::symplectic, name);
    require_size(n % 4 == 0, name, alg, "n = 2m with m even");
    Element x = alg.zero();
    Element y = alg.zero();
    for (std::size_t block = 0; block < 2; ++block) {
      const auto off = block * m;
      for (std::size_t i = 1; i < m; i += 2) {
        x += e(off + i, off + i) - e(off + i + 1, off + i + 1);
        y += e(off + i, off + i + 1) + e(off + i + 1, off + i);
      }
    }
    return {x, y, CriterionId::h_s3};
  }
  if (name == "s2_transpose") {
    require_matrices(alg, Involution::transpose, name);
    require_size(n >= 2, name, alg, "n >= 2");
    return {e(1, 1) - e(2, 2), e(1, 2) + e(2, 1), CriterionId::first};
  }
  if (name == "s2_symplectic") {
    require_matrices(alg, Involution::symplectic, name);
    require_size(n >= 4, name, alg, "n = 2m >= 4");
    return {e(1, m + 2) - e(2, m + 1), e(1, 2) + e(m + 2, m + 1), CriterionId::first};
  }
  if (name == "crit2_transpose") {
    require_matrices(alg, Involution::transpose, name);
    require_size(n >= 2, name, alg, "n >= 2");
    return {e(1, 1), e(1, 2) + e(2, 1), CriterionId::second};
  }
  if (name == "crit2_symplectic") {
    require_matrices(alg, Involution::symplectic, name);
    require_size(n >= 4, name, alg, "n = 2m >= 4");
    return {e(1, m + 2) - e(2, m + 1), e(1, 1) + e(m + 1, m + 1), CriterionId::second};
  }
  if (name == "ks_k2_transpose") {
    require_matrices(alg, Involution::transpose, name);
    require_size(n >= 3, name, alg, "n >= 3");
    return {e(1, 2) - e(2, 1), e(1, 3) - e(3, 1), CriterionId::a};
  }
  if (name == "ks_k2_symplectic") {
    require_matrices(alg, Involution::symplectic, name);
    require_size(n >= 4, name, alg, "n = 2m >= 4");
    return {e(1, m + 1), e(m + 1, 1), CriterionId::a};
  }
  if (name == "ks_k2_v2_transpose") {
    require_matrices(alg, Involution::transpose, name);
    require_size(n >= 3, name, alg, "n >= 3");
    return {e(1, 2) + e(2, 1), e(1, n) - e(n, 1), CriterionId::b};
  }
  if (name == "ks_k2_v2_symplectic") {
    require_matrices(alg, Involution::symplectic, name);
    require_size(n >= 4, name, alg, "n = 2m >= 4");
    return {e(1, m) + e(2 * m, m + 1), e(m, 2 * m), CriterionId::b};
  }
  if (name == "k_k2_symplectic_m2") {
    require_matrices(alg, Involution::symplectic, name);
    require_size(n == 2, name, alg, "n = 2");
    return {e(1, 2), e(2, 1), CriterionId::d};
  }
  std::string known;
  for (const auto& k : paper_witness_names()) known += (known.empty() ? "" : ", ") + k;
  throw UnknownId("unknown witness '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<Element> candidate_pool(const std::vector<Element>& basis, SearchBudget::Pool pool) {
  std::vector<Element> out = basis;
  if (pool == SearchBudget::Pool::basis) return out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      out.push_back(basis[i] + basis[j]);
      out.push_back(basis[i] - basis[j]);
    }
  }
  return out;
}

SearchResult witness_search(StructureContext& ctx, CriterionId id, SearchBudget budget) {
  SearchResult result;
  const auto s_pool = candidate_pool(ctx.s_basis(), budget.pool);
  const auto k_pool = candidate_pool(ctx.k_basis(), budget.pool);
  auto pool_of = [&](Type t) -> const std::vector<Element>& { return t == Type::S ? s_pool : k_pool; };

  std::vector<std::pair<Type, Type>> orientations;
  const Shape shape = shape_of(id);
  orientations.emplace_back(shape.x, shape.y);
  if (orientation_free(id)) orientations.emplace_back(shape.y, shape.x);

  auto exhausted = [&] { return budget.max_pairs != 0 && result.tried >= budget.max_pairs; };

  for (const auto& [tx, ty] : orientations) {
    std::optional<MembershipTest> test;
    const auto target = target_of(id, tx == Type::S);
    if (!target.empty()) test.emplace(ctx.eval(target));
    for (const auto& x : pool_of(tx)) {
      for (const auto& y : pool_of(ty)) {
        if (exhausted()) return result;
        ++result.tried;
        auto outcome = evaluate(ctx, id, x, y, true, test ? &*test : nullptr);
        if (outcome.pass) {
          result.outcome = check_criterion(ctx, id, x, y);
          return result;
        }
      }
    }
  }
  if (id == CriterionId::second && !exhausted()) {
    ++result.tried;
    const auto one = ctx.algebra().one();
    auto outcome = check_criterion(ctx, id, one, one);
    if (outcome.pass) result.outcome = std::move(outcome);
  }
  return result;
}

}  // namespace starcheck
