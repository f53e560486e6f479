#include <gtest/gtest.h>

#include "printers.hpp"

#include "oracle.hpp"
#include "starcheck/structure.hpp"

using namespace starcheck;

namespace {

const oracle::Rationals Q;

struct Instance {
  std::size_t n;
  bool symplectic;
};

const std::vector<Instance> kInstances = {{2, false}, {3, false}, {4, false}, {2, true}, {4, true}};

Algebra build(const Instance& inst, Field f = Field::rationals()) {
  return Algebra::matrices(f, inst.n, inst.symplectic ? Involution::symplectic : Involution::transpose);
}

}  // namespace

TEST(SetExpr, ParsesProductsPowersAndJordan) {
  EXPECT_EQ(SetExpr::parse("S^2").to_string(), "(S)^2");
  EXPECT_EQ(SetExpr::parse("KS + SK").to_string(), "((K S) + (S K))");
  EXPECT_EQ(SetExpr::parse("K o K").to_string(), "(K o K)");
  EXPECT_EQ(SetExpr::parse("S^2 K").kind(), SetExpr::Kind::product);
}

TEST(SetExpr, ReportsColumn) {
  try {
    SetExpr::parse("S + Q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(SetExpr::parse("S^0"), ParseError);
  EXPECT_THROW(SetExpr::parse("(S K"), ParseError);
  EXPECT_THROW(SetExpr::parse(""), ParseError);
}

TEST(Structure, SymmetricAndSkewDimensions) {
  for (const auto& inst : kInstances) {
    StructureContext ctx(build(inst));
    const std::size_t n = inst.n;
    const std::size_t bigger = n * (n + 1) / 2;
    const std::size_t smaller = n * (n - 1) / 2;
    EXPECT_EQ(ctx.S().dim(), inst.symplectic ? smaller : bigger);
    EXPECT_EQ(ctx.K().dim(), inst.symplectic ? bigger : smaller);
    EXPECT_EQ(ctx.S().dim() + ctx.K().dim(), n * n);
  }
  StructureContext h(Algebra::quaternions());
  EXPECT_EQ(h.S().dim(), 1u);
  EXPECT_EQ(h.K().dim(), 3u);
}

TEST(Structure, ProductSpansMatchOracle) {
  for (const auto& inst : kInstances) {
    StructureContext ctx(build(inst));
    const auto s = oracle::symmetric_span(Q, inst.n, inst.symplectic);
    const auto k = oracle::symmetric_span(Q, inst.n, inst.symplectic, true);
    const auto s2 = oracle::products(Q, s, s);
    const auto kok = oracle::products(Q, k, k, oracle::Op::jordan);
    const std::string label = build(inst).describe();

    EXPECT_EQ(ctx.eval("S^2").dim(), s2.size()) << label;
    EXPECT_EQ(ctx.eval("S^3").dim(), oracle::products(Q, s2, s).size()) << label;
    EXPECT_EQ(ctx.eval("K o K").dim(), kok.size()) << label;
    EXPECT_EQ(ctx.eval("(K o K)^3").dim(), oracle::products(Q, oracle::products(Q, kok, kok), kok).size()) << label;
    EXPECT_EQ(ctx.eval("S K S").dim(), oracle::products(Q, oracle::products(Q, s, k), s).size()) << label;
    EXPECT_EQ(ctx.eval("S^2 K").dim(), oracle::products(Q, s2, k).size()) << label;
    EXPECT_EQ(ctx.eval("KS + SK").dim(), oracle::sum(Q, oracle::products(Q, k, s), oracle::products(Q, s, k)).size())
        << label;
    EXPECT_EQ(ctx.eval("K + K^2").dim(), oracle::sum(Q, k, oracle::products(Q, k, k)).size()) << label;
  }
}

TEST(Structure, SetAlgebraChains) {
  for (const auto& inst : kInstances) {
    StructureContext ctx(build(inst));
    EXPECT_TRUE(ctx.S().is_subspace_of(ctx.eval("S^2")));
    EXPECT_TRUE(ctx.eval("S^2").is_subspace_of(ctx.eval("S^3")));
    EXPECT_TRUE(ctx.eval("K o K").is_subspace_of(ctx.eval("K^2")));
    EXPECT_TRUE(ctx.eval("K o K").is_subspace_of(ctx.S()));
  }
}

TEST(Structure, TraceZeroContainsMixedProducts) {
  for (const auto& inst : kInstances) {
    StructureContext ctx(build(inst));
    const Subspace tz = trace_zero(ctx.algebra());
    EXPECT_EQ(tz.dim(), inst.n * inst.n - 1);
    EXPECT_TRUE(ctx.eval("KS + SK").is_subspace_of(tz));
    EXPECT_TRUE(ctx.eval("KS").is_subspace_of(tz));
  }
  EXPECT_THROW(trace_zero(Algebra::quaternions()), Unsupported);
}

TEST(Structure, CenterAndCentralizerOfS) {
  for (const auto& inst : kInstances) {
    StructureContext ctx(build(inst));
    EXPECT_EQ(ctx.Z().dim(), 1u);
    EXPECT_EQ(ctx.dim_over_center(), inst.n * inst.n);
    const bool m2_symplectic = inst.symplectic && inst.n == 2;
    EXPECT_EQ(ctx.cent_s().dim(), m2_symplectic ? 4u : 1u);
    EXPECT_EQ(ctx.s_commutative(), ctx.Z() == ctx.S());
  }
  StructureContext h(Algebra::quaternions());
  EXPECT_TRUE(h.s_commutative());
  EXPECT_EQ(h.cent_s().dim(), 4u);
  EXPECT_EQ(h.Z(), h.S());
}

TEST(Structure, Probes) {
  StructureContext m2s(build({2, true}));
  EXPECT_TRUE(m2s.s_commutative());
  EXPECT_TRUE(mixed_probe(m2s.algebra(), m2s.S(), m2s.K()).holds);

  StructureContext m2t(build({2, false}));
  EXPECT_FALSE(m2t.s_commutative());
  EXPECT_TRUE(m2t.k_commutative());
  const auto probe = commutativity_probe(m2t.algebra(), m2t.S(), ProbeMode::commutative);
  ASSERT_TRUE(probe.witness.has_value());
  const auto& [a, b] = *probe.witness;
  EXPECT_FALSE(lie(a, b).is_zero());

  StructureContext m3t(build({3, false}));
  EXPECT_FALSE(m3t.k_commutative());
  EXPECT_FALSE(m3t.k_skew_commutative());
  EXPECT_FALSE(mixed_probe(m3t.algebra(), m3t.S(), m3t.K()).holds);
}

TEST(Structure, DimensionsAgreeOverGF5) {
  for (const auto& inst : kInstances) {
    StructureContext q(build(inst));
    StructureContext f5(build(inst, Field::prime(5)));
    for (const char* expr : {"S", "K", "S^2", "S^3", "K o K", "(K o K)^3", "S K S", "S^2 K"}) {
      EXPECT_EQ(q.eval(expr).dim(), f5.eval(expr).dim()) << expr << " on " << q.algebra().describe();
    }
  }
}
