#include "starcheck/algebra.hpp"

#include <array>
#include <charconv>

namespace starcheck {

std::string_view to_string(Involution involution) {
  switch (involution) {
    case Involution::transpose:
      return "transpose";
    case Involution::symplectic:
      return "symplectic";
    case Involution::quaternion_conjugation:
      return "conjugation";
  }
  return "?";
}

Algebra Algebra::matrices(Field field, std::size_t n, Involution involution) {
  if (n == 0) throw AlgebraError("matrix size must be at least 1");
  if (involution == Involution::quaternion_conjugation) {
    throw AlgebraError("quaternion conjugation is not an involution on matrices");
  }
  if (involution == Involution::symplectic && n % 2 != 0) {
    throw AlgebraError("the symplectic involution needs even n, got " + std::to_string(n));
  }
  return Algebra(field, n, involution, false);
}

Algebra Algebra::quaternions(Field field) {
  // Over GF(p) the quaternion algebra splits, so it is no longer a division ring.
  if (!field.is_rational()) throw AlgebraError("quaternions are only provided over Q");
  return Algebra(field, 0, Involution::quaternion_conjugation, true);
}

Algebra Algebra::parse(std::string_view spec, std::string_view field_spec) {
  const Field field = Field::parse(field_spec);
  if (spec == "quat") return quaternions(field);
  constexpr std::string_view prefix = "mat:";
  if (spec.substr(0, prefix.size()) != prefix) {
    throw AlgebraError("unknown algebra '" + std::string(spec) + "' (expected mat:<n>:<involution> or quat)");
  }
  auto rest = spec.substr(prefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw AlgebraError("missing involution in '" + std::string(spec) + "'");
  std::size_t n = 0;
  const auto digits = rest.substr(0, colon);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw AlgebraError("malformed size in '" + std::string(spec) + "'");
  }
  const auto inv = rest.substr(colon + 1);
  if (inv == "transpose") return matrices(field, n, Involution::transpose);
  if (inv == "symplectic") return matrices(field, n, Involution::symplectic);
  throw AlgebraError("unknown involution '" + std::string(inv) + "'");
}

std::string Algebra::spec() const {
  if (quaternion_) return "quat";
  return "mat:" + std::to_string(n_) + ":" + std::string(to_string(involution_));
}

std::string Algebra::describe() const {
  if (quaternion_) return "H(" + field_.name() + "), conjugation";
  return "M_" + std::to_string(n_) + "(" + field_.name() + "), " + std::string(to_string(involution_));
}

Element Algebra::zero() const {
  return Element(*this, zero_vector(field_, dim()));
}

Element Algebra::one() const {
  Vector v = zero_vector(field_, dim());
  if (quaternion_) {
    v[0] = Scalar::one(field_);
  } else {
    for (std::size_t i = 0; i < n_; ++i) v[i * n_ + i] = Scalar::one(field_);
  }
  return Element(*this, std::move(v));
}

Element Algebra::basis_element(std::size_t index) const {
  if (index >= dim()) throw DimensionMismatch("basis index " + std::to_string(index) + " out of range");
  Vector v = zero_vector(field_, dim());
  v[index] = Scalar::one(field_);
  return Element(*this, std::move(v));
}

Element Algebra::matrix_unit(std::size_t row, std::size_t col) const {
  if (quaternion_) throw Unsupported("matrix units on the quaternions");
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw DimensionMismatch("matrix unit e(" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside M_" + std::to_string(n_));
  }
  return basis_element((row - 1) * n_ + (col - 1));
}

Element Algebra::quaternion_unit(std::size_t index) const {
  if (!quaternion_) throw Unsupported("quaternion units on a matrix algebra");
  return basis_element(index);
}

Element Algebra::from_int_coords(std::initializer_list<long> coords) const {
  Vector v;
  v.reserve(coords.size());
  for (long c : coords) v.push_back(Scalar::from_int(field_, c));
  return Element(*this, std::move(v));
}

Element::Element(Algebra algebra, Vector coords) : algebra_(algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) {
    throw DimensionMismatch("element has " + std::to_string(coords_.size()) + " coordinates, algebra has dimension " +
                            std::to_string(algebra_.dim()));
  }
  for (const auto& c : coords_) {
    if (c.field() != algebra_.field()) throw FieldMismatch();
  }
}

const Scalar& Element::entry(std::size_t row, std::size_t col) const {
  const auto n = algebra_.n();
  if (algebra_.is_quaternion() || row < 1 || row > n || col < 1 || col > n) {
    throw DimensionMismatch("entry (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
  }
  return coords_[(row - 1) * n + (col - 1)];
}

void Element::require_same_algebra(const Element& other) const {
  if (algebra_ != other.algebra_) {
    throw AlgebraError("elements of " + algebra_.describe() + " and " + other.algebra_.describe());
  }
}

Element Element::star() const {
  const auto& field = algebra_.field();
  Vector out = zero_vector(field, coords_.size());
  if (algebra_.is_quaternion()) {
    out[0] = coords_[0];
    for (std::size_t i = 1; i < 4; ++i) out[i] = -coords_[i];
    return Element(algebra_, std::move(out));
  }
  const auto n = algebra_.n();
  if (algebra_.involution() == Involution::transpose) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = coords_[j * n + i];
    }
    return Element(algebra_, std::move(out));
  }
  // Entrywise form of J X^t J^-1: X*(i,j) = sign * X(swap(j), swap(i)), where
  // swap exchanges the two halves of the index range.
  const auto m = n / 2;
  auto swap = [m](std::size_t i) { return i < m ? i + m : i - m; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = coords_[swap(j) * n + swap(i)];
      out[i * n + j] = ((i < m) == (j < m)) ? x : -x;
    }
  }
  return Element(algebra_, std::move(out));
}

bool Element::is_symmetric() const {
  return star() == *this;
}

bool Element::is_skew() const {
  return star() == -*this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

namespace {

// Products of the units 1, i, j, k: unit index and sign of e_a * e_b.
struct UnitProduct {
  std::size_t unit;
  int sign;
};

constexpr std::array<std::array<UnitProduct, 4>, 4> kQuaternionTable = {{
    {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
    {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
    {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
    {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},
}};

}  // namespace

Element operator*(const Element& a, const Element& b) {
  a.require_same_algebra(b);
  const auto& alg = a.algebra_;
  Vector out = zero_vector(alg.field(), alg.dim());
  if (alg.is_quaternion()) {
    for (std::size_t p = 0; p < 4; ++p) {
      if (a.coords_[p].is_zero()) continue;
      for (std::size_t q = 0; q < 4; ++q) {
        if (b.coords_[q].is_zero()) continue;
        const auto [unit, sign] = kQuaternionTable[p][q];
        const auto term = a.coords_[p] * b.coords_[q];
        if (sign > 0) {
          out[unit] += term;
        } else {
          out[unit] -= term;
        }
      }
    }
    return Element(alg, std::move(out));
  }
  const auto n = alg.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const auto& x = a.coords_[i * n + l];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& y = b.coords_[l * n + j];
        if (!y.is_zero()) out[i * n + j] += x * y;
      }
    }
  }
  return Element(alg, std::move(out));
}

Element operator*(const Scalar& c, Element a) {
  for (auto& x : a.coords_) x *= c;
  return a;
}

std::string Element::to_string() const {
  std::string out;
  const auto n = algebra_.n();
  static constexpr std::array<const char*, 4> kUnits = {"", "i", "j", "k"};
  for (std::size_t idx = 0; idx < coords_.size(); ++idx) {
    const auto& c = coords_[idx];
    if (c.is_zero()) continue;
    std::string name;
    if (algebra_.is_quaternion()) {
      name = kUnits[idx];
    } else {
      const auto r = std::to_string(idx / n + 1);
      const auto s = std::to_string(idx % n + 1);
      name = n < 10 ? "e" + r + s : "e" + r + "," + s;
    }
    std::string coeff = c.to_string();
    const bool negative = algebra_.field().is_rational() && sgn(c.rational()) < 0;
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (name.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += name;
    } else {
      out += coeff + " " + name;
    }
  }
  return out.empty() ? "0" : out;
}

SkSplit sk_split(const Element& r) {
  const auto half = Scalar::from_int(r.algebra().field(), 2).inverse();
  const auto rs = r.star();
  return {half * (r + rs), half * (r - rs)};
}

std::optional<Element> right_inverse(const Element& a) {
  const auto& alg = a.algebra();
  // Columns of the left-multiplication operator z -> a z.
  std::vector<Vector> images;
  images.reserve(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) images.push_back((a * alg.basis_element(i)).coords());
  CombinationSolver solver(alg.field(), alg.dim(), images);
  if (solver.rank() != alg.dim()) return std::nullopt;
  auto coeffs = solver.solve(alg.one().coords());
  if (!coeffs) return std::nullopt;
  return Element(alg, std::move(*coeffs));
}

bool is_invertible(const Element& a) {
  const auto& alg = a.algebra();
  if (alg.is_quaternion()) return !a.is_zero();
  const auto n = alg.n();
  EchelonBasis rows(alg.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(a.coords().begin() + static_cast<std::ptrdiff_t>(i * n),
               a.coords().begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    if (!rows.insert(std::move(row))) return false;
  }
  return true;
}

Element lie(const Element& a, const Element& b) {
  return a * b - b * a;
}

Element jordan(const Element& a, const Element& b) {
  return a * b + b * a;
}

Scalar trace(const Element& a) {
  const auto& alg = a.algebra();
  if (alg.is_quaternion()) throw Unsupported("trace is only defined on matrix algebras");
  Scalar t(alg.field());
  for (std::size_t i = 1; i <= alg.n(); ++i) t += a.entry(i, i);
  return t;
}

Vector vectorize(const Element& a) {
  return a.coords();
}

Element devectorize(const Algebra& algebra, Vector coords) {
  return Element(algebra, std::move(coords));
}

Element random_element(const Algebra& algebra, std::mt19937_64& rng, ElementKind kind, int bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Vector v;
  v.reserve(algebra.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i) v.push_back(Scalar::from_int(algebra.field(), dist(rng)));
  Element r(algebra, std::move(v));
  switch (kind) {
    case ElementKind::general:
      return r;
    case ElementKind::symmetric:
      return r + r.star();
    case ElementKind::skew:
      return r - r.star();
  }
  return r;
}

}  // namespace starcheck
