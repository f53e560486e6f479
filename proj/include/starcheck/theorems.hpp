#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "starcheck/criteria.hpp"
#include "starcheck/structure.hpp"

namespace starcheck {

struct Check {
  std::string name;
  bool pass;
  nlohmann::json evidence;
};

enum class TheoremStatus { verified, hypothesis_failed, conclusion_failed };

std::string_view to_string(TheoremStatus status);

/// Hypotheses are computed on the instance, never assumed. Simplicity of R
/// holds by construction for M_n(F) and the quaternions and is not re-checked.
struct TheoremReport {
  std::string theorem;
  std::string algebra;
  std::vector<Check> hypotheses;
  /// Evaluated even when a hypothesis fails, so the report shows what the
  /// conclusion looks like on instances outside the theorem's scope.
  std::vector<Check> conclusions;
  TheoremStatus status;
};

const std::vector<std::string>& theorem_ids();

/// Throws UnknownId listing the known ids. `budget` bounds the witness
/// searches behind hypotheses of the form "there exist x, y such that ...".
TheoremReport verify_theorem(StructureContext& ctx, std::string_view id, SearchBudget budget = {});

/// A witness for `id`: one of the explicit constructions when one applies to
/// the algebra, otherwise the first hit of witness_search.
struct WitnessLookup {
  std::optional<CriterionOutcome> outcome;
  /// "paper:<name>", "search" or "none".
  std::string source;
  std::size_t tried = 0;
};

WitnessLookup find_witness(StructureContext& ctx, CriterionId id, SearchBudget budget = {});

}  // namespace starcheck
