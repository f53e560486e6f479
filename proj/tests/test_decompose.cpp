#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "oracle.hpp"
#include "starcheck/criteria.hpp"
#include "starcheck/decompose.hpp"
#include "starcheck/serialize.hpp"
#include "starcheck/structure.hpp"

using namespace starcheck;

namespace {

const oracle::Rationals Q;

Algebra transpose(std::size_t n) { return Algebra::matrices(Field::rationals(), n, Involution::transpose); }
Algebra symplectic(std::size_t n) { return Algebra::matrices(Field::rationals(), n, Involution::symplectic); }

/// Recomposes a matrix certificate with dense arithmetic, independent of Element.
bool recomposes(const Certificate& cert) {
  const std::size_t n = cert.target.algebra().n();
  auto total = oracle::zeros(Q, n);
  for (const auto& term : cert.terms) {
    auto product = oracle::to_matrix(term.factors.front().value);
    for (std::size_t i = 1; i < term.factors.size(); ++i)
      product = oracle::mul(Q, product, oracle::to_matrix(term.factors[i].value));
    total = oracle::add(Q, total, product);
  }
  return total == oracle::to_matrix(cert.target);
}

Element random_target(const Algebra& alg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_element(alg, rng);
}

}  // namespace

TEST(Decompose, S3OnEvenTransposeRecomposes) {
  for (std::size_t n : {2, 4}) {
    const Algebra alg = transpose(n);
    const auto w = paper_witness("s3_transpose_even", alg);
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Certificate cert = decompose_s3(alg, w.x, w.y, random_target(alg, seed));
      const Verdict v = verify_certificate(cert);
      EXPECT_TRUE(v.valid) << v.violation << ": " << v.detail;
      EXPECT_LE(cert.terms.size(), 5u);
      EXPECT_TRUE(recomposes(cert));
      EXPECT_EQ((cert.x * cert.y - cert.y * cert.x) * cert.z, alg.one());
    }
  }
}

TEST(Decompose, S3OnSymplecticRecomposes) {
  const Algebra alg = symplectic(4);
  const auto w = paper_witness("s3_symplectic", alg);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Certificate cert = decompose_s3(alg, w.x, w.y, random_target(alg, seed));
    EXPECT_TRUE(verify_certificate(cert).valid);
    EXPECT_TRUE(recomposes(cert));
  }
}

TEST(Decompose, S2OnM2TransposeUsesTwoPairs) {
  const Algebra alg = transpose(2);
  const auto w = paper_witness("s2_transpose", alg);
  const XsyDecomposer closed = m2_transpose_decomposer(alg, w.x, w.y);
  EXPECT_EQ(closed.bound, 2u);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Certificate cert = decompose_s2(alg, w.x, w.y, random_target(alg, seed), closed);
    const Verdict v = verify_certificate(cert);
    EXPECT_TRUE(v.valid) << v.violation << ": " << v.detail;
    EXPECT_LE(cert.terms.size(), 7u);
    EXPECT_TRUE(recomposes(cert));
  }
}

TEST(Decompose, ClosedFormSplitMatchesTheProduct) {
  const Algebra alg = transpose(2);
  const auto w = paper_witness("s2_transpose", alg);
  const XsyDecomposer closed = m2_transpose_decomposer(alg, w.x, w.y);
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const Element s = random_element(alg, rng, ElementKind::symmetric);
    const auto pairs = closed.split(s);
    ASSERT_TRUE(pairs.has_value());
    EXPECT_LE(pairs->size(), 2u);
    Element total = alg.zero();
    for (const auto& [a, b] : *pairs) {
      EXPECT_TRUE(a.is_symmetric());
      EXPECT_TRUE(b.is_symmetric());
      total += a * b;
    }
    EXPECT_EQ(total, w.x * s * w.y);
  }
  EXPECT_THROW(m2_transpose_decomposer(transpose(3), w.x, w.y), AlgebraError);
}

TEST(Decompose, S2GenericSplitterOnLargerInstances) {
  for (const auto& [alg, name] : {std::pair{transpose(4), "s3_transpose_even"}, {symplectic(4), "s3_symplectic"}}) {
    const auto w = paper_witness(name, alg);
    const XsyDecomposer d = default_s2_decomposer(alg, w.x, w.y);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Certificate cert = decompose_s2(alg, w.x, w.y, random_target(alg, seed), d);
      EXPECT_TRUE(verify_certificate(cert).valid) << alg.describe();
      EXPECT_LE(cert.terms.size(), 1 + d.bound + 4);
      EXPECT_TRUE(recomposes(cert));
    }
  }
}

TEST(Decompose, KChainOnM2Symplectic) {
  const Algebra alg = symplectic(2);
  const auto w = paper_witness("k_k2_symplectic_m2", alg);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Certificate cert = decompose_k_chain(alg, w.x, w.y, random_target(alg, seed), Scheme::k_plus_k2);
    const Verdict v = verify_certificate(cert);
    EXPECT_TRUE(v.valid) << v.violation << ": " << v.detail;
    EXPECT_TRUE(recomposes(cert));
    EXPECT_EQ(cert.terms.front().factors.size(), 1u);
    EXPECT_TRUE(cert.terms.front().factors.front().value.is_skew());
  }
}

TEST(Decompose, KChainWithCubesOnM4Transpose) {
  const Algebra alg = transpose(4);
  StructureContext ctx(alg);
  const auto found = witness_search(ctx, CriterionId::e, {SearchBudget::Pool::pairs, 0});
  ASSERT_TRUE(found.found());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Certificate cert =
        decompose_k_chain(alg, found.outcome->x, found.outcome->y, random_target(alg, seed), Scheme::k_plus_k2_k3);
    EXPECT_TRUE(verify_certificate(cert).valid);
    EXPECT_TRUE(recomposes(cert));
    EXPECT_EQ(cert.terms.size(), 4u);
  }
}

TEST(Decompose, ObstructionsAreReported) {
  const Algebra m2 = transpose(2);
  const Element k = m2.matrix_unit(1, 2) - m2.matrix_unit(2, 1);
  EXPECT_THROW(decompose_k_chain(m2, k, k, m2.matrix_unit(1, 1), Scheme::k_plus_k2), DecompositionObstructed);
  const Element s = m2.matrix_unit(1, 1);
  EXPECT_THROW(decompose_s3(m2, s, s, m2.one()), NotInvertibleError);
  EXPECT_THROW(decompose_s3(m2, k, s, m2.one()), WrongSymmetryType);
}

TEST(Decompose, ZeroTargetGivesAValidCertificate) {
  const Algebra alg = transpose(2);
  const auto w = paper_witness("s3_transpose_even", alg);
  const Certificate cert = decompose_s3(alg, w.x, w.y, alg.zero());
  EXPECT_TRUE(verify_certificate(cert).valid);
  EXPECT_TRUE(recomposes(cert));
}

TEST(Decompose, VerifierCatchesTampering) {
  const Algebra alg = transpose(2);
  const auto w = paper_witness("s3_transpose_even", alg);
  const Certificate good = decompose_s3(alg, w.x, w.y, random_target(alg, 3));
  ASSERT_TRUE(verify_certificate(good).valid);

  Certificate wrong_sum = good;
  wrong_sum.target += alg.one();
  EXPECT_EQ(verify_certificate(wrong_sum).violation, "sum mismatch");

  Certificate wrong_tag = good;
  wrong_tag.terms[1].factors[0].value = alg.matrix_unit(1, 2);
  EXPECT_EQ(verify_certificate(wrong_tag).violation, "factor not symmetric");

  Certificate skew_tag = good;
  skew_tag.terms[1].factors[0].tag = Tag::K;
  EXPECT_FALSE(verify_certificate(skew_tag).valid);

  Certificate too_long = good;
  too_long.terms.push_back(too_long.terms.back());
  too_long.terms.push_back(too_long.terms.back());
  too_long.terms.back().factors[0].value = -too_long.terms.back().factors[0].value;
  EXPECT_EQ(verify_certificate(too_long).violation, "bound exceeded");

  Certificate empty = good;
  empty.terms[0].factors.clear();
  EXPECT_FALSE(verify_certificate(empty).valid);
}

TEST(Decompose, K2SplitterReturnsNothingExactlyOutsideK2) {
  const Algebra m2 = transpose(2);
  StructureContext ctx(m2);
  const Element k = m2.matrix_unit(1, 2) - m2.matrix_unit(2, 1);
  const XsyDecomposer d = generic_k2_decomposer(m2, k, k);
  const MembershipTest k2(ctx.eval("K^2"));
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    Element s = random_element(m2, rng, ElementKind::symmetric);
    if (trial % 2 == 0) s = Scalar::from_int(m2.field(), trial) * m2.one();
    EXPECT_EQ(d.split(s).has_value(), k2.contains(k * s * k)) << s.to_string();
  }
}

TEST(Decompose, S2SplitterAgreesWithMembership) {
  const Algebra m3 = transpose(3);
  StructureContext ctx(m3);
  const MembershipTest s2(ctx.eval("S^2"));
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = random_element(m3, rng, ElementKind::symmetric);
    const Element y = random_element(m3, rng, ElementKind::symmetric);
    const Element s = random_element(m3, rng, ElementKind::symmetric);
    const auto pairs = generic_xsy_s2(m3, x, y, s);
    EXPECT_EQ(pairs.has_value(), s2.contains(x * s * y));
    if (!pairs) continue;
    Element total = m3.zero();
    for (const auto& [a, b] : *pairs) total += a * b;
    EXPECT_EQ(total, x * s * y);
  }
}

TEST(Decompose, CertificateJsonRoundTrip) {
  const Algebra alg = transpose(4);
  const auto w = paper_witness("s3_transpose_even", alg);
  const Certificate cert = decompose_s3(alg, w.x, w.y, random_target(alg, 9));
  const json first = to_json(cert);
  const Certificate back = certificate_from_json(json::parse(first.dump()));
  EXPECT_EQ(to_json(back), first);
  EXPECT_TRUE(verify_certificate(back).valid);
  EXPECT_EQ(back.target, cert.target);
  EXPECT_EQ(back.terms.size(), cert.terms.size());
}

TEST(Decompose, SchemeAndTagNames) {
  for (auto s : {Scheme::s3, Scheme::s2, Scheme::k_plus_k2, Scheme::k_plus_k2_k3})
    EXPECT_EQ(parse_scheme(to_string(s)), s);
  for (auto t : {Tag::S, Tag::K, Tag::Scalar}) EXPECT_EQ(parse_tag(to_string(t)), t);
  EXPECT_THROW(parse_scheme("s4"), UnknownId);
}
