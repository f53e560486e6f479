#include "starcheck/field.hpp"

#include <charconv>
#include <limits>

namespace starcheck {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base = mod(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::int64_t mpz_residue(const mpz_class& value, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p == 2) throw InvalidField("characteristic 2 is not supported");
  if (!is_prime(p)) throw InvalidField("modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31)) {
    throw InvalidField("modulus " + std::to_string(p) + " is too large (limit 2^31)");
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  constexpr std::string_view prefix = "gf:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw InvalidField("malformed field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw InvalidField("unknown field '" + std::string(text) + "' (expected q or gf:<p>)");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::string Field::spec() const {
  return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

Scalar::Scalar(Field field) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(0);
  } else {
    value_ = std::int64_t{0};
  }
}

Scalar Scalar::from_int(Field field, long value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.value_ = mpq_class(value);
  } else {
    s.value_ = mod(value, field.characteristic());
  }
  return s;
}

Scalar Scalar::from_rational(Field field, const mpq_class& value) {
  Scalar s(field);
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    s.value_ = std::move(v);
    return s;
  }
  const auto p = field.characteristic();
  const auto num = mpz_residue(value.get_num(), p);
  const auto den = mpz_residue(value.get_den(), p);
  if (den == 0) throw DivisionByZero();
  s.value_ = num * mod_pow(den, p - 2, p) % p;
  return s;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string str(text);
  if (str.empty()) throw ParseError("empty scalar", 0);
  mpq_class value;
  // mpq_set_str accepts "n" and "n/d" but not a leading '+'.
  if (str.front() == '+') str.erase(0, 1);
  if (value.set_str(str, 10) != 0) throw ParseError("malformed scalar '" + std::string(text) + "'", 0);
  if (value.get_den() == 0) throw DivisionByZero();
  value.canonicalize();
  return from_rational(field, value);
}

bool Scalar::is_zero() const noexcept {
  if (auto r = std::get_if<std::int64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto r = std::get_if<std::int64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) throw FieldMismatch();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s(field_);
  if (field_.is_rational()) {
    s.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  } else {
    const auto p = field_.characteristic();
    s.value_ = mod_pow(std::get<std::int64_t>(value_), p - 2, p);
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.value_ = mpq_class(-std::get<mpq_class>(value_));
  } else {
    s.value_ = mod(-std::get<std::int64_t>(value_), field_.characteristic());
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<std::int64_t>(value_);
    r = (r + std::get<std::int64_t>(other.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<std::int64_t>(value_);
    r = mod(r - std::get<std::int64_t>(other.value_), field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<std::int64_t>(value_);
    r = r * std::get<std::int64_t>(other.value_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_rational()) {
    return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
  }
  return std::get<std::int64_t>(a.value_) < std::get<std::int64_t>(b.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::int64_t>(value_));
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Unsupported("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::int64_t Scalar::residue() const {
  if (field_.is_rational()) throw Unsupported("residue() on a rational scalar");
  return std::get<std::int64_t>(value_);
}

}  // namespace starcheck
