#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "starcheck/serialize.hpp"

using namespace starcheck;

namespace {

Algebra transpose(std::size_t n, Field f = Field::rationals()) { return Algebra::matrices(f, n, Involution::transpose); }

Scalar q(long num, long den = 1) { return Scalar::from_rational(Field::rationals(), mpq_class(num, den)); }

}  // namespace

TEST(Serialize, MatrixElementJson) {
  const Algebra m2 = transpose(2);
  const Element e = m2.matrix_unit(1, 2) - q(1, 2) * m2.matrix_unit(2, 1);
  const json expected = json::parse(R"({"n": 2, "entries": [["0", "1"], ["-1/2", "0"]]})");
  EXPECT_EQ(to_json(e), expected);
  EXPECT_EQ(element_from_json(m2, expected), e);
  EXPECT_EQ(element_from_json(m2, json("e12 - 1/2 e21")), e);
}

TEST(Serialize, QuaternionJson) {
  const Algebra h = Algebra::quaternions();
  const Element e = h.one() + q(2) * h.quaternion_unit(1);
  const json expected = json::parse(R"({"coeffs": ["1", "2", "0", "0"]})");
  EXPECT_EQ(to_json(e), expected);
  EXPECT_EQ(element_from_json(h, expected), e);
  EXPECT_EQ(e.to_string(), "1 + 2 i");
}

TEST(Serialize, MalformedElementJson) {
  const Algebra m2 = transpose(2);
  EXPECT_THROW(element_from_json(m2, json::parse(R"({"n": 3, "entries": [["1", "0", "0"]]})")), Error);
  EXPECT_THROW(element_from_json(m2, json::parse(R"({"n": 2, "entries": [["1", "x"], ["0", "0"]]})")), ParseError);
  EXPECT_THROW(element_from_json(m2, json::parse(R"({"coeffs": ["1"]})")), Error);
  EXPECT_THROW(element_from_json(m2, json(42)), ParseError);
}

TEST(Serialize, SparseTextRoundTrip) {
  std::mt19937_64 rng(101);
  const std::vector<Algebra> algebras = {transpose(2), transpose(3), transpose(10),
                                         transpose(3, Field::prime(5)), Algebra::quaternions(),
                                         Algebra::matrices(Field::rationals(), 4, Involution::symplectic)};
  for (const auto& alg : algebras) {
    for (int trial = 0; trial < 20; ++trial) {
      const Element e = random_element(alg, rng);
      EXPECT_EQ(parse_element(alg, e.to_string()), e) << alg.describe() << ": " << e.to_string();
    }
    EXPECT_EQ(parse_element(alg, alg.zero().to_string()), alg.zero());
  }
}

TEST(Serialize, SparseTextForms) {
  const Algebra m3 = transpose(3);
  EXPECT_EQ(parse_element(m3, "2"), q(2) * m3.one());
  EXPECT_EQ(parse_element(m3, "-e13 + 3/4 e31"), q(3, 4) * m3.matrix_unit(3, 1) - m3.matrix_unit(1, 3));
  EXPECT_EQ(parse_element(m3, "2 * e22"), q(2) * m3.matrix_unit(2, 2));
  const Algebra m10 = transpose(10);
  EXPECT_EQ(m10.matrix_unit(10, 3).to_string(), "e10,3");
  EXPECT_EQ(parse_element(m10, "e10,3"), m10.matrix_unit(10, 3));
  const Algebra h = Algebra::quaternions();
  EXPECT_EQ(parse_element(h, "1 - 3/4 k"), h.one() - q(3, 4) * h.quaternion_unit(3));
}

TEST(Serialize, SparseTextErrors) {
  const Algebra m3 = transpose(3);
  EXPECT_THROW(parse_element(m3, "e14"), Error);
  EXPECT_THROW(parse_element(m3, "e1"), ParseError);
  EXPECT_THROW(parse_element(m3, "i"), ParseError);
  EXPECT_THROW(parse_element(m3, "2 +"), ParseError);
  EXPECT_THROW(parse_element(m3, ""), ParseError);
  EXPECT_THROW(parse_element(Algebra::quaternions(), "e11"), ParseError);
}

TEST(Serialize, CertificateRoundTrip) {
  const Algebra m2 = transpose(2);
  const auto w = paper_witness("s3_transpose_even", m2);
  const Certificate cert = decompose_s3(m2, w.x, w.y, m2.matrix_unit(1, 2));
  const json j = to_json(cert);
  EXPECT_EQ(j["scheme"], "s3");
  EXPECT_EQ(j["algebra"], "mat:2:transpose");
  EXPECT_EQ(j["field"], "q");
  EXPECT_EQ(j["terms"].size(), cert.terms.size());
  const Certificate back = certificate_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_TRUE(verify_certificate(back).valid);

  json broken = j;
  broken["scheme"] = "s9";
  EXPECT_THROW(certificate_from_json(broken), UnknownId);
  broken = j;
  broken.erase("terms");
  EXPECT_THROW(certificate_from_json(broken), Error);
  broken = j;
  broken["terms"][0]["factors"][0]["tag"] = "Q";
  EXPECT_THROW(certificate_from_json(broken), Error);
}

TEST(Serialize, VerdictAndSubspace) {
  const json v = to_json(Verdict{true, "", ""});
  EXPECT_EQ(v["valid"], true);
  const Algebra m2 = transpose(2);
  const Subspace s = Subspace::span(m2, std::vector<Element>{m2.one()});
  const json js = to_json(s);
  EXPECT_EQ(js["dim"], 1);
  EXPECT_EQ(js["ambient"], 4);
  EXPECT_EQ(js["basis"].size(), 1u);
}

TEST(Serialize, TheoremReportsAsJsonAndText) {
  StructureContext ctx(transpose(2));
  const TheoremReport r = verify_theorem(ctx, "s3_equals_r");
  const json j = to_json(r);
  EXPECT_EQ(j["theorem"], "s3_equals_r");
  EXPECT_EQ(j["status"], "Verified");
  ASSERT_FALSE(j["conclusions"].empty());
  EXPECT_TRUE(j["conclusions"][0].contains("evidence"));
  const std::string text = render_text({r});
  EXPECT_EQ(text.rfind("theorem", 0), 0u);
  EXPECT_NE(text.find("s3_equals_r  Verified"), std::string::npos);
}

TEST(Serialize, SearchResultJson) {
  StructureContext ctx(transpose(3));
  const SearchResult r = witness_search(ctx, CriterionId::first);
  const json j = to_json(r, CriterionId::first, ctx.algebra());
  EXPECT_EQ(j["criterion"], "first");
  EXPECT_EQ(j["found"], true);
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_EQ(j["tried"], r.tried);
}
