#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starcheck/cli.hpp"
#include "starcheck/criteria.hpp"
#include "starcheck/decompose.hpp"
#include "starcheck/staralgebra.hpp"
#include "starcheck/structure.hpp"
#include "starcheck/theorems.hpp"

using namespace starcheck;

namespace {

struct Instance {
  std::size_t n;
  Involution involution;
};

Algebra build(const Instance& inst, Field f = Field::rationals()) { return Algebra::matrices(f, inst.n, inst.involution); }

const std::vector<Instance> kFullS2 = {{2, Involution::transpose},  {3, Involution::transpose},
                                       {4, Involution::transpose},  {5, Involution::transpose},
                                       {4, Involution::symplectic}, {6, Involution::symplectic}};
const Instance kM2Symplectic = {2, Involution::symplectic};

/// Accumulates failures for one criterion; the first few are kept for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    return std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + notes_;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

std::string label(const Algebra& alg) { return alg.spec() + (alg.field().is_rational() ? "" : "@" + alg.field().spec()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Element seeded_target(const Algebra& alg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_element(alg, rng);
}

// Dimension tables shared by the rational run and the finite-field repeat.

using DimTable = std::vector<std::pair<std::string, std::size_t>>;

DimTable dims_s2(Field f) {
  DimTable t;
  for (const auto& inst : kFullS2) {
    StructureContext ctx(build(inst, f));
    t.push_back({ctx.algebra().spec() + " S^2", ctx.eval("S^2").dim()});
  }
  StructureContext m2(build(kM2Symplectic, f));
  t.push_back({m2.algebra().spec() + " S^2", m2.eval("S^2").dim()});
  return t;
}

DimTable dims_s3(Field f) {
  DimTable t;
  std::vector<Instance> all = kFullS2;
  all.push_back(kM2Symplectic);
  for (const auto& inst : all) {
    StructureContext ctx(build(inst, f));
    t.push_back({ctx.algebra().spec() + " S", ctx.S().dim()});
    t.push_back({ctx.algebra().spec() + " S^3", ctx.eval("S^3").dim()});
  }
  return t;
}

const std::vector<Instance> kKSide = {{3, Involution::transpose},
                                      {4, Involution::transpose},
                                      {5, Involution::transpose},
                                      {4, Involution::symplectic}};

DimTable dims_k_side(Field f) {
  DimTable t;
  for (const auto& inst : kKSide) {
    StructureContext ctx(build(inst, f));
    for (const char* e : {"K o K", "(K o K)^3", "K + K S K", "K S + K^2"})
      t.push_back({ctx.algebra().spec() + " " + e, ctx.eval(e).dim()});
  }
  StructureContext m2(build(kM2Symplectic, f));
  for (const char* e : {"K^2", "K + K^2"}) t.push_back({m2.algebra().spec() + " " + e, m2.eval(e).dim()});
  if (f.is_rational()) {
    StructureContext h(Algebra::quaternions(f));
    t.push_back({"quat K^2", h.eval("K^2").dim()});
  }
  return t;
}

DimTable dims_sks(Field f) {
  DimTable t;
  for (const auto& inst : kFullS2) {
    StructureContext ctx(build(inst, f));
    for (const char* e : {"S K S", "S^2 K"}) t.push_back({ctx.algebra().spec() + " " + e, ctx.eval(e).dim()});
  }
  return t;
}

// Criteria.

Tally s_squared() {
  Tally t;
  for (const auto& inst : kFullS2) {
    StructureContext ctx(build(inst));
    t.check(ctx.eval("S^2").dim() == inst.n * inst.n, label(ctx.algebra()) + " dim S^2");
  }
  StructureContext m2(build(kM2Symplectic));
  t.check(m2.eval("S^2").dim() == 1, "mat:2:symplectic dim S^2");
  return t;
}

Tally s_cubed() {
  Tally t;
  for (const auto& inst : kFullS2) {
    StructureContext ctx(build(inst));
    const Subspace& s2 = ctx.eval("S^2");
    const Subspace& s3 = ctx.eval("S^3");
    t.check(ctx.S().is_subspace_of(s2), label(ctx.algebra()) + " S in S^2");
    t.check(s2.is_subspace_of(s3), label(ctx.algebra()) + " S^2 in S^3");
    t.check(s3.dim() == inst.n * inst.n, label(ctx.algebra()) + " dim S^3");
  }
  StructureContext m2(build(kM2Symplectic));
  t.check(m2.eval("S^3").dim() == 1, "mat:2:symplectic dim S^3");
  return t;
}

Tally witnesses() {
  Tally t;
  const std::vector<std::pair<const char*, std::vector<Instance>>> sanctioned = {
      {"s3_transpose_even", {{2, Involution::transpose}, {4, Involution::transpose}}},
      {"s3_symplectic", {{4, Involution::symplectic}}},
      {"s2_transpose", {{2, Involution::transpose}, {3, Involution::transpose}, {4, Involution::transpose}}},
      {"s2_symplectic", {{4, Involution::symplectic}, {6, Involution::symplectic}}},
      {"crit2_transpose", {{2, Involution::transpose}, {3, Involution::transpose}, {4, Involution::transpose}}},
      {"crit2_symplectic", {{4, Involution::symplectic}, {6, Involution::symplectic}}},
      {"ks_k2_transpose", {{3, Involution::transpose}, {4, Involution::transpose}}},
      {"ks_k2_v2_transpose", {{3, Involution::transpose}, {4, Involution::transpose}}},
      {"ks_k2_symplectic", {{4, Involution::symplectic}, {6, Involution::symplectic}}},
      {"ks_k2_v2_symplectic", {{4, Involution::symplectic}, {6, Involution::symplectic}}},
      {"k_k2_symplectic_m2", {{2, Involution::symplectic}}},
  };
  for (const auto& [name, instances] : sanctioned) {
    for (const auto& inst : instances) {
      StructureContext ctx(build(inst));
      const PaperWitness w = paper_witness(name, ctx.algebra());
      const CriterionOutcome o = check_criterion(ctx, w.criterion, w.x, w.y);
      t.check(o.pass, std::string(name) + " on " + label(ctx.algebra()));
      // The criterion is only sufficient; pair it with the dimension count it predicts.
      if (w.criterion == CriterionId::first || w.criterion == CriterionId::second)
        t.check(ctx.eval("S^2").is_full(), std::string(name) + " S^2 full on " + label(ctx.algebra()));
    }
  }

  const Algebra m2 = build({2, Involution::transpose});
  const Field q = m2.field();
  const auto first = paper_witness("s2_transpose", m2);
  const auto second = paper_witness("crit2_transpose", m2);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> draw(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar a = Scalar::from_int(q, draw(rng));
    const Scalar b = Scalar::from_int(q, draw(rng));
    const Scalar d = Scalar::from_int(q, draw(rng));
    const Element s = a * m2.matrix_unit(1, 1) + b * (m2.matrix_unit(1, 2) + m2.matrix_unit(2, 1)) +
                      d * m2.matrix_unit(2, 2);
    const Element xsy = b * m2.matrix_unit(1, 1) + a * m2.matrix_unit(1, 2) - d * m2.matrix_unit(2, 1) -
                        b * m2.matrix_unit(2, 2);
    t.check(first.x * s * first.y == xsy, "xsy expansion");
    const Element k = a * (m2.matrix_unit(1, 2) - m2.matrix_unit(2, 1));
    t.check(second.x * k * second.y == a * m2.matrix_unit(1, 1), "xky expansion");
  }
  return t;
}

Tally decompositions() {
  Tally t;
  for (std::size_t n : {2, 4}) {
    const Algebra alg = build({n, Involution::transpose});
    const auto w = paper_witness("s3_transpose_even", alg);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Certificate cert = decompose_s3(alg, w.x, w.y, seeded_target(alg, seed));
      t.check(verify_certificate(cert).valid && cert.terms.size() <= 5,
              "s3 on " + alg.spec() + " seed " + std::to_string(seed));
    }
  }
  const Algebra m2 = build({2, Involution::transpose});
  const auto w = paper_witness("s2_transpose", m2);
  const XsyDecomposer closed = m2_transpose_decomposer(m2, w.x, w.y);
  t.check(closed.bound == 2, "closed-form split bound");
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Certificate cert = decompose_s2(m2, w.x, w.y, seeded_target(m2, seed), closed);
    t.check(verify_certificate(cert).valid && cert.terms.size() <= 7, "s2 seed " + std::to_string(seed));
  }
  return t;
}

Tally odd_transpose() {
  Tally t;
  StructureContext ctx(build({3, Involution::transpose}));
  const Algebra& m3 = ctx.algebra();
  bool threw = false;
  try {
    paper_witness("s3_transpose_even", m3);
  } catch (const AlgebraError&) {
    threw = true;
  }
  t.check(threw, "even-n witness accepted n = 3");
  const auto pool = candidate_pool(ctx.s_basis(), SearchBudget::Pool::pairs);
  for (const auto& x : pool)
    for (const auto& y : pool) t.check(!right_inverse(lie(x, y)).has_value(), "invertible xy - yx");
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial)
    t.check(!is_invertible(random_element(m3, rng, ElementKind::skew)), "invertible skew matrix");
  t.check(!witness_search(ctx, CriterionId::h_s3).found(), "h_s3 search found a pair");
  return t;
}

Tally k_side() {
  Tally t;
  for (const auto& inst : kKSide) {
    StructureContext ctx(build(inst));
    const std::string at = " on " + label(ctx.algebra());
    t.check(ctx.eval("K o K") == ctx.S(), "K o K = S" + at);
    t.check(ctx.eval("(K o K)^3").is_full(), "(K o K)^3 = R" + at);
  }
  StructureContext m2s(build(kM2Symplectic));
  t.check(m2s.eval("K^2").is_full(), "K^2 = R on mat:2:symplectic");
  StructureContext h(Algebra::quaternions());
  t.check(h.eval("K^2").is_full(), "K^2 = R on quat");

  std::vector<Instance> all = kFullS2;
  all.push_back(kM2Symplectic);
  for (const auto& inst : all) {
    StructureContext ctx(build(inst));
    if (ctx.k_skew_commutative()) continue;
    t.check(ctx.eval("K + K S K").is_full(), "K + KSK = R on " + label(ctx.algebra()));
  }
  if (!h.k_skew_commutative()) t.check(h.eval("K + K S K").is_full(), "K + KSK = R on quat");

  for (const auto& [name, inst] : {std::pair{"ks_k2_transpose", Instance{3, Involution::transpose}},
                                   std::pair{"ks_k2_symplectic", Instance{4, Involution::symplectic}}}) {
    StructureContext ctx(build(inst));
    const auto w = paper_witness(name, ctx.algebra());
    t.check(w.criterion == CriterionId::a, std::string(name) + " is a variant (a) witness");
    t.check(check_criterion(ctx, w.criterion, w.x, w.y).pass, std::string(name) + " passes");
    t.check(ctx.eval("K S + K^2").is_full(), "KS + K^2 = R on " + label(ctx.algebra()));
  }

  const Algebra& alg = m2s.algebra();
  const auto w = paper_witness("k_k2_symplectic_m2", alg);
  t.check(m2s.eval("K + K^2").is_full(), "K + K^2 = R on mat:2:symplectic");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Certificate cert = decompose_k_chain(alg, w.x, w.y, seeded_target(alg, seed), Scheme::k_plus_k2);
    t.check(verify_certificate(cert).valid, "K + K^2 certificate seed " + std::to_string(seed));
  }
  return t;
}

Tally trace_obstruction() {
  Tally t;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (Involution inv : {Involution::transpose, Involution::symplectic}) {
      if (inv == Involution::symplectic && n % 2 != 0) continue;
      StructureContext ctx(build({n, inv}));
      t.check(ctx.eval("K S + S K").dim() <= n * n - 1, "dim KS + SK on " + label(ctx.algebra()));
      if (n <= 4) {
        const auto r = witness_search(ctx, CriterionId::g, {SearchBudget::Pool::basis, 0});
        t.check(!r.found() && r.tried > 0, "variant (g) witness on " + label(ctx.algebra()));
      }
    }
  }
  return t;
}

Tally sks() {
  Tally t;
  for (const auto& inst : kFullS2) {
    StructureContext ctx(build(inst));
    const std::string at = " on " + label(ctx.algebra());
    t.check(ctx.eval("S K S").dim() == inst.n * inst.n, "dim SKS" + at);
    t.check(ctx.eval("S^2 K").dim() == inst.n * inst.n, "dim S^2 K" + at);
    const ProbeResult p = mixed_probe(ctx.algebra(), ctx.S(), ctx.K());
    t.check(!p.holds && p.witness.has_value(), "noncommuting s, k" + at);
  }
  StructureContext m2(build(kM2Symplectic));
  t.check(mixed_probe(m2.algebra(), m2.S(), m2.K()).holds, "noncommuting s, k on mat:2:symplectic");
  return t;
}

Tally centralizer_of_s() {
  Tally t;
  std::vector<Instance> scalars = {{2, Involution::transpose}, {3, Involution::transpose},
                                   {4, Involution::transpose}, {5, Involution::transpose},
                                   {4, Involution::symplectic}, {6, Involution::symplectic}};
  for (const auto& inst : scalars) {
    StructureContext ctx(build(inst));
    t.check(ctx.cent_s() == ctx.Z() && ctx.Z().dim() == 1, "Cent(S) scalars on " + label(ctx.algebra()));
  }
  StructureContext m2(build(kM2Symplectic));
  t.check(m2.cent_s().is_full(), "Cent(S) = R on mat:2:symplectic");

  std::vector<Instance> all = scalars;
  all.push_back(kM2Symplectic);
  std::vector<Algebra> algebras;
  for (const auto& inst : all) algebras.push_back(build(inst));
  algebras.push_back(Algebra::quaternions());
  for (const auto& alg : algebras) {
    StructureContext ctx(alg);
    t.check(ctx.s_commutative() == (ctx.Z() == ctx.S()), "S commutative iff Z = S on " + label(alg));
    if (ctx.dim_over_center() > 4)
      t.check(ctx.cent_s().is_subspace_of(ctx.Z()), "Cent(S) in Z on " + label(alg));
  }
  return t;
}

Tally corpus() {
  Tally t;
  const Algebra m3 = build({3, Involution::transpose});
  std::mt19937_64 rng(23);
  for (const auto& [file, expect_hold] :
       {std::pair{"identities.txt", true}, std::pair{"identities_mutated.txt", false}}) {
    const std::string path = bundled_data_dir() + "/" + file;
    const auto entries = parse_corpus(read_file(path), path);
    t.check(!entries.empty(), std::string(file) + " is empty");
    for (const auto& entry : entries) {
      for (const auto& claim : entry.claims) {
        const bool holds = check_claim(claim).holds;
        t.check(holds == expect_hold, entry.name + ": " + claim.text);
        // A failing claim must be caught by some substitution; a holding one by none.
        bool any_failure = false;
        for (int i = 0; i < 3; ++i)
          any_failure |= !check_claim_instance(claim, random_assignment(entry.declarations, m3, rng), m3);
        t.check(any_failure == !holds, entry.name + " substitution disagrees");
      }
    }
  }
  return t;
}

Tally dimension_bounds() {
  Tally t;
  std::vector<Algebra> algebras;
  for (const auto& inst : kFullS2) algebras.push_back(build(inst));
  algebras.push_back(build(kM2Symplectic));
  algebras.push_back(Algebra::quaternions());
  for (const auto& alg : algebras) {
    StructureContext ctx(alg);
    const std::size_t s = ctx.S().dim();
    const std::size_t r = alg.dim();
    if (ctx.eval("S^3").is_full()) t.check(s * s * s >= r, "dim S cubed on " + label(alg));
    if (ctx.eval("S^2").is_full()) t.check(s * s >= r, "dim S squared on " + label(alg));
  }
  return t;
}

DimTable robustness_table(Field f) {
  DimTable all;
  for (auto part : {dims_s2, dims_s3, dims_k_side, dims_sks}) {
    const DimTable t = part(f);
    all.insert(all.end(), t.begin(), t.end());
  }
  return all;
}

Tally field_robustness(std::ostream& log) {
  Tally t;
  const DimTable q = robustness_table(Field::rationals());
  const DimTable f5_rows = robustness_table(Field::prime(5));
  const std::map<std::string, std::size_t> f5(f5_rows.begin(), f5_rows.end());
  const DimTable f3_rows = robustness_table(Field::prime(3));
  const std::map<std::string, std::size_t> f3(f3_rows.begin(), f3_rows.end());
  for (const auto& [key, dim] : q) {
    // Quaternions are a rational object only; their row has no finite-field counterpart.
    if (key.rfind("quat", 0) == 0) continue;
    const auto it = f5.find(key);
    t.check(it != f5.end() && it->second == dim,
            key + ": " + std::to_string(dim) + " vs " + (it == f5.end() ? "missing" : std::to_string(it->second)));
    const auto low = f3.find(key);
    if (low != f3.end() && low->second != dim)
      log << "note: over GF(3) " << key << " has dim " << low->second << " (over Q " << dim << ")\n";
  }
  return t;
}

}  // namespace

struct Criterion {
  std::string name;
  std::function<Tally()> run;
};

int main() {
  const std::vector<Criterion> criteria = {
      {"S^2 = R on matrices", s_squared},
      {"S^3 chain", s_cubed},
      {"criterion witnesses and expansions", witnesses},
      {"bounded decompositions, seeds 1-100", decompositions},
      {"odd transpose obstruction", odd_transpose},
      {"K-side spans", k_side},
      {"trace obstruction for KS + SK", trace_obstruction},
      {"SKS and S^2 K", sks},
      {"centralizer of S", centralizer_of_s},
      {"identity corpus", corpus},
      {"dimension bounds", dimension_bounds},
      {"field robustness", [] { return field_robustness(std::cout); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    std::string verdict;
    std::string detail;
    try {
      const Tally t = run();
      verdict = t.ok() ? "PASS" : "FAIL";
      detail = t.summary();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (verdict == "FAIL") ++failed;
    std::cout << verdict << ' ' << (i + 1) << ' ' << name << " (" << detail << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
