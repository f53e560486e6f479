#include "starcheck/serialize.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "starcheck/errors.hpp"

namespace starcheck {

json to_json(const Element& e) {
  if (e.algebra().is_quaternion()) {
    json coeffs = json::array();
    for (const auto& c : e.coords()) coeffs.push_back(c.to_string());
    return {{"coeffs", coeffs}};
  }
  const auto n = e.algebra().n();
  json rows = json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= n; ++j) row.push_back(e.entry(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"n", n}, {"entries", rows}};
}

namespace {

Scalar scalar_from_json(Field field, const json& j) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
  throw ParseError("scalar must be a string or an integer", 0);
}

}  // namespace

Element element_from_json(const Algebra& algebra, const json& j) {
  if (j.is_string()) return parse_element(algebra, j.get<std::string>());
  if (!j.is_object()) throw ParseError("element must be an object or a string", 0);
  Vector coords;
  if (algebra.is_quaternion()) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("quaternion needs \"coeffs\"", 0);
    for (const auto& c : j["coeffs"]) coords.push_back(scalar_from_json(algebra.field(), c));
    return Element(algebra, std::move(coords));
  }
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("matrix needs \"entries\"", 0);
  const auto& rows = j["entries"];
  if (j.contains("n") && j["n"] != algebra.n()) {
    throw DimensionMismatch("matrix has n = " + j["n"].dump() + ", expected " + std::to_string(algebra.n()));
  }
  if (rows.size() != algebra.n()) throw DimensionMismatch("wrong number of matrix rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != algebra.n()) throw DimensionMismatch("wrong number of matrix columns");
    for (const auto& c : row) coords.push_back(scalar_from_json(algebra.field(), c));
  }
  return Element(algebra, std::move(coords));
}

Element parse_element(const Algebra& algebra, std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what + " in element '" + std::string(text) + "'", pos + 1);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  const Field field = algebra.field();
  Element out = algebra.zero();
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) fail("empty element");
      break;
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    std::optional<Scalar> coeff;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num(digits());
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        auto den = digits();
        if (den.empty()) fail("expected a denominator");
        num += "/" + std::string(den);
      }
      coeff = Scalar::parse(field, num);
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }

    std::optional<Element> unit;
    if (pos < text.size() && algebra.is_matrix() && text[pos] == 'e') {
      ++pos;
      auto first_digits = digits();
      std::size_t row = 0;
      std::size_t col = 0;
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        auto second = digits();
        if (first_digits.empty() || second.empty()) fail("malformed matrix unit");
        row = std::stoul(std::string(first_digits));
        col = std::stoul(std::string(second));
      } else {
        if (first_digits.size() != 2) fail("matrix unit needs two indices");
        row = static_cast<std::size_t>(first_digits[0] - '0');
        col = static_cast<std::size_t>(first_digits[1] - '0');
      }
      if (row == 0 || col == 0 || row > algebra.n() || col > algebra.n()) fail("matrix unit out of range");
      unit = algebra.matrix_unit(row, col);
    } else if (pos < text.size() && algebra.is_quaternion() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = algebra.quaternion_unit(static_cast<std::size_t>(text[pos] - 'i' + 1));
      ++pos;
    }
    if (!coeff && !unit) fail("expected a coefficient or a unit");

    Element term = unit ? *unit : algebra.one();
    if (coeff) term = *coeff * term;
    if (negative) term = -term;
    out += term;
  }
  return out;
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(c.to_string());
    basis.push_back(std::move(row));
  }
  return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

json to_json(const CriterionOutcome& o) {
  json memberships = json::array();
  for (const auto& m : o.memberships) {
    memberships.push_back({{"generator", m.generator.to_string()},
                           {"value", to_json(m.value)},
                           {"contained", m.contained}});
  }
  json j = {{"criterion", to_string(o.criterion)},
            {"x", to_json(o.x)},
            {"y", to_json(o.y)},
            {"combination", o.combination},
            {"combination_value", to_json(o.combination_value)},
            {"nonzero", o.nonzero},
            {"target", o.target},
            {"quantified_over", o.quantified_over},
            {"basis_quantified", o.basis_quantified},
            {"memberships", memberships},
            {"pass", o.pass}};
  j["invertible"] = o.invertible ? json(*o.invertible) : json(nullptr);
  j["within_k2"] = o.within_k2 ? json(*o.within_k2) : json(nullptr);
  return j;
}

json to_json(const SearchResult& result, CriterionId id, const Algebra& algebra) {
  json j = {{"criterion", to_string(id)},
            {"algebra", algebra.spec()},
            {"field", algebra.field().spec()},
            {"tried", result.tried},
            {"found", result.found()}};
  j["witness"] = result.outcome ? to_json(*result.outcome) : json(nullptr);
  return j;
}

namespace {

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"evidence", c.evidence}});
  return out;
}

json monomial_json(const Monomial& m) {
  json factors = json::array();
  for (const auto& f : m.factors) factors.push_back({{"tag", to_string(f.tag)}, {"value", to_json(f.value)}});
  return {{"factors", factors}};
}

}  // namespace

json to_json(const TheoremReport& r) {
  return {{"theorem", r.theorem},
          {"algebra", r.algebra},
          {"status", to_string(r.status)},
          {"hypotheses", checks_json(r.hypotheses)},
          {"conclusions", checks_json(r.conclusions)}};
}

json to_json(const Certificate& cert) {
  json terms = json::array();
  for (const auto& m : cert.terms) terms.push_back(monomial_json(m));
  return {{"scheme", to_string(cert.scheme)},
          {"algebra", cert.target.algebra().spec()},
          {"field", cert.target.algebra().field().spec()},
          {"target", to_json(cert.target)},
          {"witness", {{"x", to_json(cert.x)}, {"y", to_json(cert.y)}, {"z", to_json(cert.z)}}},
          {"split_bound", cert.split_bound},
          {"terms", terms}};
}

json to_json(const Verdict& v) {
  return {{"valid", v.valid}, {"violation", v.violation}, {"detail", v.detail}};
}

Certificate certificate_from_json(const json& j) {
  auto need = [&](const json& obj, const char* key) -> const json& {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("certificate lacks \"") + key + "\"", 0);
    return obj[key];
  };
  const Algebra algebra =
      Algebra::parse(need(j, "algebra").get<std::string>(), j.contains("field") ? j["field"].get<std::string>() : "q");
  const json& witness = need(j, "witness");
  Certificate cert{parse_scheme(need(j, "scheme").get<std::string>()),
                   element_from_json(algebra, need(j, "target")),
                   element_from_json(algebra, need(witness, "x")),
                   element_from_json(algebra, need(witness, "y")),
                   element_from_json(algebra, need(witness, "z")),
                   {},
                   j.value("split_bound", std::size_t{0})};
  const json& terms = need(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array", 0);
  for (const auto& t : terms) {
    Monomial m;
    const json& factors = need(t, "factors");
    if (!factors.is_array()) throw ParseError("\"factors\" must be an array", 0);
    for (const auto& f : factors) {
      m.factors.push_back({parse_tag(need(f, "tag").get<std::string>()), element_from_json(algebra, need(f, "value"))});
    }
    cert.terms.push_back(std::move(m));
  }
  return cert;
}

std::string render_text(const std::vector<TheoremReport>& reports) {
  std::size_t width = 7;
  for (const auto& r : reports) width = std::max(width, r.theorem.size());

  auto tally = [](const std::vector<Check>& checks) {
    std::size_t ok = 0;
    for (const auto& c : checks) ok += c.pass ? 1 : 0;
    return std::to_string(ok) + "/" + std::to_string(checks.size());
  };

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "theorem" << "  " << std::setw(16) << "status"
      << "  hyp    concl  algebra\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(width)) << r.theorem << "  " << std::setw(16)
        << to_string(r.status) << "  " << std::setw(5) << tally(r.hypotheses) << "  " << std::setw(5)
        << tally(r.conclusions) << "  " << r.algebra << '\n';
  }
  return out.str();
}

}  // namespace starcheck
