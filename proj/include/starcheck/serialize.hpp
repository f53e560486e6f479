#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "starcheck/criteria.hpp"
#include "starcheck/decompose.hpp"
#include "starcheck/staralgebra.hpp"
#include "starcheck/subspace.hpp"
#include "starcheck/theorems.hpp"

namespace starcheck {

using nlohmann::json;

/// Matrices: {"n": n, "entries": [[...], ...]}; quaternions: {"coeffs": [...]}.
/// Entries are scalar strings.
json to_json(const Element& e);
/// Throws ParseError on malformed input and DimensionMismatch on a size mismatch.
Element element_from_json(const Algebra& algebra, const json& j);

/// Sparse text as produced by Element::to_string: "e12 - 1/2 e21", "2 + i - 3/4 k".
/// A bare coefficient denotes that multiple of the identity. Indices above 9
/// are written with a comma, as in "e10,3". Throws ParseError.
Element parse_element(const Algebra& algebra, std::string_view text);

json to_json(const Subspace& s);
json to_json(const CriterionOutcome& outcome);
json to_json(const SearchResult& result, CriterionId id, const Algebra& algebra);
json to_json(const TheoremReport& report);

/// Includes "algebra" and "field" so that the certificate can be read back on its own.
json to_json(const Certificate& cert);
json to_json(const Verdict& verdict);
/// Throws ParseError, UnknownId or AlgebraError on malformed certificates.
Certificate certificate_from_json(const json& j);

/// One line per report: theorem, status, passed hypotheses and conclusions.
std::string render_text(const std::vector<TheoremReport>& reports);

}  // namespace starcheck
