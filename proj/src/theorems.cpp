#include "starcheck/theorems.hpp"

#include <functional>
#include <random>

#include "starcheck/decompose.hpp"
#include "starcheck/errors.hpp"

namespace starcheck {

using nlohmann::json;

std::string_view to_string(TheoremStatus status) {
  switch (status) {
    case TheoremStatus::verified:
      return "Verified";
    case TheoremStatus::hypothesis_failed:
      return "HypothesisFailed";
    case TheoremStatus::conclusion_failed:
      return "ConclusionFailed";
  }
  return "?";
}

WitnessLookup find_witness(StructureContext& ctx, CriterionId id, SearchBudget budget) {
  for (const auto& name : paper_witness_names()) {
    std::optional<PaperWitness> w;
    try {
      w = paper_witness(name, ctx.algebra());
    } catch (const AlgebraError&) {
      continue;
    }
    if (w->criterion != id) continue;
    auto outcome = check_criterion(ctx, id, w->x, w->y);
    if (outcome.pass) return {std::move(outcome), "paper:" + name, 1};
  }
  auto result = witness_search(ctx, id, budget);
  if (result.found()) return {std::move(result.outcome), "search", result.tried};
  return {std::nullopt, "none", result.tried};
}

namespace {

json pair_json(const Element& a, const Element& b) {
  return {{"x", a.to_string()}, {"y", b.to_string()}};
}

class Verifier {
 public:
  Verifier(StructureContext& ctx, std::string id, SearchBudget budget) : ctx_(ctx), budget_(budget) {
    report_.theorem = std::move(id);
    report_.algebra = ctx.algebra().describe();
  }

  StructureContext& ctx() { return ctx_; }
  SearchBudget budget() const { return budget_; }
  std::size_t d() const { return ctx_.algebra().dim(); }

  bool hypothesis(std::string name, bool pass, json evidence = json::object()) {
    report_.hypotheses.push_back({std::move(name), pass, std::move(evidence)});
    return pass;
  }

  bool conclusion(std::string name, bool pass, json evidence = json::object()) {
    report_.conclusions.push_back({std::move(name), pass, std::move(evidence)});
    return pass;
  }

  bool all_hypotheses() const {
    for (const auto& h : report_.hypotheses) {
      if (!h.pass) return false;
    }
    return true;
  }

  // Hypothesis helpers.

  bool s_proper() {
    return hypothesis("S != R", ctx_.S().dim() < d(), {{"dim_S", ctx_.S().dim()}, {"dim_R", d()}});
  }

  bool s_noncommutative() {
    auto probe = commutativity_probe(ctx_.algebra(), ctx_.S(), ProbeMode::commutative);
    json ev = json::object();
    if (probe.witness) ev = pair_json(probe.witness->first, probe.witness->second);
    return hypothesis("S noncommutative", !probe.holds, ev);
  }

  bool s_commutative() {
    auto probe = commutativity_probe(ctx_.algebra(), ctx_.S(), ProbeMode::commutative);
    json ev = json::object();
    if (probe.witness) ev = pair_json(probe.witness->first, probe.witness->second);
    return hypothesis("S commutative", probe.holds, ev);
  }

  bool k_not_skew_commutative() {
    auto probe = commutativity_probe(ctx_.algebra(), ctx_.K(), ProbeMode::skew_commutative);
    json ev = json::object();
    if (probe.witness) ev = pair_json(probe.witness->first, probe.witness->second);
    return hypothesis("K not skew-commutative", !probe.holds, ev);
  }

  bool k_noncommutative() {
    auto probe = commutativity_probe(ctx_.algebra(), ctx_.K(), ProbeMode::commutative);
    json ev = json::object();
    if (probe.witness) ev = pair_json(probe.witness->first, probe.witness->second);
    return hypothesis("K noncommutative", !probe.holds, ev);
  }

  bool mixed_pair() {
    auto probe = mixed_probe(ctx_.algebra(), ctx_.S(), ctx_.K());
    json ev = json::object();
    if (probe.witness) ev = {{"s", probe.witness->first.to_string()}, {"k", probe.witness->second.to_string()}};
    return hypothesis("exists s in S, k in K with sk - ks != 0", !probe.holds, ev);
  }

  bool dim_over_center(bool greater_than_four) {
    const auto q = ctx_.dim_over_center();
    json ev = {{"dim_Z_R", q}, {"dim_Z", ctx_.Z().dim()}};
    return greater_than_four ? hypothesis("dim_Z R > 4", q > 4, ev) : hypothesis("dim_Z R = 4", q == 4, ev);
  }

  std::optional<CriterionOutcome> witness(CriterionId id) {
    auto found = find_witness(ctx_, id, budget_);
    json ev = {{"criterion", to_string(id)}, {"source", found.source}, {"tried", found.tried}};
    if (found.outcome) {
      ev["x"] = found.outcome->x.to_string();
      ev["y"] = found.outcome->y.to_string();
      if (!found.outcome->target.empty()) ev["target"] = found.outcome->target;
    }
    hypothesis("witness for criterion " + std::string(to_string(id)), found.outcome.has_value(), ev);
    return found.outcome;
  }

  // Conclusion helpers.

  bool equals(std::string_view lhs, std::string_view rhs) {
    const auto& a = ctx_.eval(lhs);
    const auto& b = ctx_.eval(rhs);
    return conclusion(std::string(lhs) + " = " + std::string(rhs), a == b,
                      {{"lhs", lhs}, {"lhs_dim", a.dim()}, {"rhs", rhs}, {"rhs_dim", b.dim()}});
  }

  bool differs(std::string_view lhs, std::string_view rhs) {
    const auto& a = ctx_.eval(lhs);
    const auto& b = ctx_.eval(rhs);
    return conclusion(std::string(lhs) + " != " + std::string(rhs), !(a == b),
                      {{"lhs", lhs}, {"lhs_dim", a.dim()}, {"rhs", rhs}, {"rhs_dim", b.dim()}});
  }

  bool subset(std::string_view lhs, const Subspace& b, std::string_view rhs) {
    const auto& a = ctx_.eval(lhs);
    return conclusion(std::string(lhs) + " in " + std::string(rhs), a.is_subspace_of(b),
                      {{"lhs", lhs}, {"lhs_dim", a.dim()}, {"rhs", rhs}, {"rhs_dim", b.dim()}});
  }

  bool subset(std::string_view lhs, std::string_view rhs) { return subset(lhs, ctx_.eval(rhs), rhs); }

  bool certificate(Scheme scheme, const CriterionOutcome& w) {
    std::mt19937_64 rng(20240611);
    const auto r = random_element(ctx_.algebra(), rng);
    json ev = {{"scheme", to_string(scheme)}, {"target", r.to_string()}};
    bool ok = false;
    try {
      const auto cert = decompose_k_chain(ctx_.algebra(), w.x, w.y, r, scheme);
      const auto verdict = verify_certificate(cert);
      ok = verdict.valid;
      ev["terms"] = cert.terms.size();
      if (!ok) ev["violation"] = verdict.violation + ": " + verdict.detail;
    } catch (const Error& e) {
      ev["error"] = e.what();
    }
    return conclusion("certificate for a random target", ok, ev);
  }

  TheoremReport finish() {
    bool concl = true;
    for (const auto& c : report_.conclusions) concl = concl && c.pass;
    if (!all_hypotheses()) {
      report_.status = TheoremStatus::hypothesis_failed;
    } else {
      report_.status = concl ? TheoremStatus::verified : TheoremStatus::conclusion_failed;
    }
    return std::move(report_);
  }

 private:
  StructureContext& ctx_;
  SearchBudget budget_;
  TheoremReport report_;
};

using Body = std::function<void(Verifier&)>;

const std::vector<std::pair<std::string, Body>>& registry() {
  static const std::vector<std::pair<std::string, Body>> table = {
      {"prop_s_commutative",
       [](Verifier& v) {
         v.s_proper();
         v.s_commutative();
         v.equals("S^2", "S");
         v.differs("S^2", "R");
       }},
      {"s3_equals_r",
       [](Verifier& v) {
         v.s_proper();
         v.s_noncommutative();
         v.subset("S", "S^2");
         v.subset("S^2", "S^3");
         v.equals("S^3", "R");
       }},
      {"cent_s_in_z",
       [](Verifier& v) {
         v.s_proper();
         v.dim_over_center(true);
         const auto& cent = v.ctx().cent_s();
         const auto& z = v.ctx().Z();
         v.conclusion("Cent(S) in Z", cent.is_subspace_of(z), {{"dim_cent_S", cent.dim()}, {"dim_Z", z.dim()}});
       }},
      {"s_comm_iff_z_eq_s",
       [](Verifier& v) {
         v.s_proper();
         v.dim_over_center(true);
         const bool comm = v.ctx().s_commutative();
         const bool z_is_s = v.ctx().Z() == v.ctx().S();
         v.conclusion("S commutative <=> Z = S", comm == z_is_s, {{"s_commutative", comm}, {"z_equals_s", z_is_s}});
       }},
      {"herstein_k",
       [](Verifier& v) {
         v.s_proper();
         v.dim_over_center(true);
         v.equals("K + K o K", "R");
       }},
      {"k6",
       [](Verifier& v) {
         v.s_proper();
         v.s_noncommutative();
         v.dim_over_center(true);
         v.equals("K o K", "S");
         v.equals("(K o K)^3", "R");
       }},
      {"k4",
       [](Verifier& v) {
         v.s_proper();
         v.s_noncommutative();
         v.dim_over_center(true);
         auto w = find_witness(v.ctx(), CriterionId::first, v.budget());
         if (!w.outcome) w = find_witness(v.ctx(), CriterionId::second, v.budget());
         json ev = {{"source", w.source}, {"tried", w.tried}};
         if (w.outcome) {
           ev["criterion"] = to_string(w.outcome->criterion);
           ev["x"] = w.outcome->x.to_string();
           ev["y"] = w.outcome->y.to_string();
         }
         v.hypothesis("witness for the first or second criterion", w.outcome.has_value(), ev);
         v.equals("(K o K)^2", "R");
       }},
      {"k_plus_ksk",
       [](Verifier& v) {
         v.s_proper();
         v.k_not_skew_commutative();
         v.equals("K + KSK", "R");
       }},
      {"ks_plus_k2_v1",
       [](Verifier& v) {
         v.s_proper();
         v.witness(CriterionId::a);
         v.equals("KS + K^2", "R");
       }},
      {"ks_plus_k2_v2",
       [](Verifier& v) {
         v.s_proper();
         auto w = v.witness(CriterionId::b);
         v.equals(w ? std::string_view(w->target) : "KS+K^2", "R");
       }},
      {"ks_plus_k2_v3",
       [](Verifier& v) {
         v.s_proper();
         auto w = v.witness(CriterionId::c);
         v.equals(w ? std::string_view(w->target) : "KS", "R");
       }},
      {"k_plus_k2",
       [](Verifier& v) {
         v.s_proper();
         v.k_not_skew_commutative();
         auto w = v.witness(CriterionId::d);
         v.equals("K + K^2", "R");
         if (w) v.certificate(Scheme::k_plus_k2, *w);
       }},
      {"k_plus_k2_k3",
       [](Verifier& v) {
         v.s_proper();
         v.k_noncommutative();
         auto w = v.witness(CriterionId::e);
         v.equals("K + K^2 + K^3", "R");
         if (w) v.certificate(Scheme::k_plus_k2_k3, *w);
       }},
      {"k_plus_k3",
       [](Verifier& v) {
         v.s_proper();
         v.k_noncommutative();
         const auto& k2 = v.ctx().eval("K^2");
         const auto& target = v.ctx().eval("K + K^3");
         v.hypothesis("K^2 in K + K^3", k2.is_subspace_of(target), {{"dim_K2", k2.dim()}, {"dim_K_K3", target.dim()}});
         v.equals("K + K^3", "R");
       }},
      {"sks_equals_r",
       [](Verifier& v) {
         v.s_proper();
         v.s_noncommutative();
         v.equals("SKS", "R");
       }},
      {"ks_sk",
       [](Verifier& v) {
         v.s_proper();
         v.s_noncommutative();
         v.witness(CriterionId::g);
         v.equals("KS + SK", "R");
       }},
      {"ks_sk_trace_zero",
       [](Verifier& v) {
         const bool matrix = v.ctx().algebra().is_matrix();
         v.hypothesis("matrix algebra", matrix, {{"algebra", v.ctx().algebra().spec()}});
         if (!matrix) return;
         const auto tz = trace_zero(v.ctx().algebra());
         v.subset("KS + SK", tz, "trace zero");
         const auto dim = v.ctx().eval("KS + SK").dim();
         v.conclusion("dim(KS + SK) <= n^2 - 1", dim + 1 <= v.d(), {{"dim", dim}, {"bound", v.d() - 1}});
       }},
      {"s2k_equals_r",
       [](Verifier& v) {
         v.s_proper();
         v.mixed_pair();
         v.equals("S^2 K", "R");
       }},
      {"ks2_equals_r",
       [](Verifier& v) {
         v.s_proper();
         v.mixed_pair();
         v.equals("K S^2", "R");
       }},
      {"sk_equals_r",
       [](Verifier& v) {
         v.s_proper();
         v.witness(CriterionId::f);
         v.equals("SK", "R");
       }},
      {"dim_bound_s3",
       [](Verifier& v) {
         const auto& s3 = v.ctx().eval("S^3");
         v.hypothesis("S^3 = R", s3.is_full(), {{"dim_S3", s3.dim()}});
         const auto s = v.ctx().S().dim();
         v.conclusion("dim(S)^3 >= dim(R)", s * s * s >= v.d(), {{"dim_S", s}, {"dim_R", v.d()}});
       }},
      {"dim_bound_s2",
       [](Verifier& v) {
         const auto& s2 = v.ctx().eval("S^2");
         v.hypothesis("S^2 = R", s2.is_full(), {{"dim_S2", s2.dim()}});
         const auto s = v.ctx().S().dim();
         v.conclusion("dim(S)^2 >= dim(R)", s * s >= v.d(), {{"dim_S", s}, {"dim_R", v.d()}});
       }},
      {"s2_equals_r",
       [](Verifier& v) {
         v.s_proper();
         v.s_noncommutative();
         v.witness(CriterionId::first);
         v.equals("S^2", "R");
       }},
      {"s2_second_criterion",
       [](Verifier& v) {
         v.s_proper();
         v.s_noncommutative();
         v.witness(CriterionId::second);
         v.equals("S^2", "R");
       }},
      {"k2_equals_r",
       [](Verifier& v) {
         v.s_proper();
         v.dim_over_center(false);
         const bool z_is_s = v.ctx().Z() == v.ctx().S();
         v.hypothesis("Z = S", z_is_s, {{"dim_Z", v.ctx().Z().dim()}, {"dim_S", v.ctx().S().dim()}});
         v.equals("K^2", "R");
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

TheoremReport verify_theorem(StructureContext& ctx, std::string_view id, SearchBudget budget) {
  for (const auto& [name, body] : registry()) {
    if (name != id) continue;
    Verifier v(ctx, name, budget);
    body(v);
    return v.finish();
  }
  std::string known;
  for (const auto& name : theorem_ids()) known += (known.empty() ? "" : ", ") + name;
  throw UnknownId("unknown theorem '" + std::string(id) + "' (known: " + known + ")");
}

}  // namespace starcheck
