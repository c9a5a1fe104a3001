#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qpoisson/catalog.hpp"
#include "qpoisson/sampling.hpp"
#include "qpoisson/serialization.hpp"

using namespace qpoisson;
using testing_support::bivector;
using testing_support::catalog_entries;
using testing_support::vec;

namespace {

Json sl2_json() { return quasi_bialgebra_to_json(builtin("sl2_coboundary").qb); }

}  // namespace

TEST(Rationals, TextForm) {
  EXPECT_EQ(rational_to_json(Rational(-3, 6)), Json("-1/2"));
  EXPECT_EQ(rational_to_json(Rational(4)), Json("4"));
  EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(rational_from_json(Json(-7)), Rational(-7));
  for (const Json bad : {Json("1/0"), Json("x"), Json(1.5), Json(nullptr), Json("1/-2")})
    EXPECT_THROW(rational_from_json(bad), ParseError) << bad.dump();
}

TEST(Tensors, SparseRoundTrip) {
  Sampler s(3);
  for (int t = 0; t < 20; ++t) {
    const Tensor x = s.tensor(3, 3);
    EXPECT_EQ(tensor_from_json(tensor_to_json(x), 3, 3), x);
  }
  EXPECT_EQ(tensor_to_json(Tensor(2, 2)), Json::array());
  EXPECT_THROW(tensor_from_json(Json::parse(R"([[0, 3, "1"]])"), 3, 2), ParseError);
  EXPECT_THROW(tensor_from_json(Json::parse(R"([[0, 1, "1"], [0, 1, "2"]])"), 3, 2), ParseError);
  EXPECT_THROW(tensor_from_json(Json::parse(R"([[0, "1"]])"), 3, 2), ParseError);
}

TEST(Bivectors, PartnerRules) {
  EXPECT_EQ(bivector_from_json(Json::parse(R"([[0, 2, "3"]])"), 3), bivector(3, 0, 2, 3));
  EXPECT_EQ(bivector_from_json(Json::parse(R"([[2, 0, "-3"]])"), 3), bivector(3, 0, 2, 3));
  EXPECT_EQ(bivector_from_json(Json::parse(R"([[0, 2, "3"], [2, 0, "-3"]])"), 3), bivector(3, 0, 2, 3));
  EXPECT_THROW(bivector_from_json(Json::parse(R"([[0, 2, "3"], [2, 0, "3"]])"), 3), ParseError);
  EXPECT_THROW(bivector_from_json(Json::parse(R"([[1, 1, "1"]])"), 3), ParseError);
  EXPECT_NO_THROW(bivector_from_json(Json::parse(R"([[1, 1, "0"]])"), 3));
  Sampler s(5);
  for (int t = 0; t < 20; ++t) {
    const Tensor r = s.bivector(4);
    EXPECT_EQ(bivector_from_json(bivector_to_json(r), 4), r);
  }
}

TEST(QuasiBialgebras, CatalogRoundTrip) {
  for (const auto& e : catalog_entries()) {
    SCOPED_TRACE(e.name);
    const Json j = quasi_bialgebra_to_json(e.qb);
    EXPECT_EQ(quasi_bialgebra_from_json(j), e.qb);
    EXPECT_EQ(quasi_bialgebra_from_json(parse_json(dump(j))), e.qb);
    EXPECT_EQ(dump(quasi_bialgebra_to_json(quasi_bialgebra_from_json(j))), dump(j));
  }
}

TEST(QuasiBialgebras, Rejections) {
  auto broken = [](auto edit) {
    Json j = sl2_json();
    edit(j);
    return j;
  };
  const std::vector<Json> bad = {
      broken([](Json& j) { j.erase("dim"); }),
      broken([](Json& j) { j["dim"] = -1; }),
      broken([](Json& j) { j["dim"] = 17; }),
      broken([](Json& j) { j["dim"] = "3"; }),
      broken([](Json& j) { j["labels"] = Json::array({"a", "b"}); }),
      broken([](Json& j) { j["bracket"].push_back(Json::array({1, 0, 0, "1"})); }),
      broken([](Json& j) { j["bracket"].push_back(Json::array({0, 1, 5, "1"})); }),
      broken([](Json& j) { j["bracket"].push_back(j["bracket"][0]); }),
      broken([](Json& j) { j["delta"] = Json::array({Json::array({0, 1, 0, "1"})}); }),
      broken([](Json& j) { j["phi"] = Json::array({Json::array({0, 2, 1, "1"})}); }),
      broken([](Json& j) { j["phi"] = Json::array({Json::array({0, 1, 2, "1/0"})}); }),
      Json::array(),
      Json(3)};
  for (const auto& j : bad) EXPECT_THROW(quasi_bialgebra_from_json(j), ParseError) << j.dump();
}

TEST(QuasiBialgebras, PhiIsCompletedAntisymmetrically) {
  Json j = quasi_bialgebra_to_json(builtin("abelian(3)").qb);
  j["phi"] = Json::array({Json::array({0, 1, 2, "2"})});
  const QuasiBialgebra qb = quasi_bialgebra_from_json(j);
  EXPECT_EQ(qb.phi.at({0, 1, 2}), Rational(2));
  EXPECT_EQ(qb.phi.at({2, 1, 0}), Rational(-2));
  EXPECT_EQ(qb.phi.at({1, 2, 0}), Rational(2));
  EXPECT_TRUE(qb.phi.check_antisymmetric());
}

TEST(QuasiBialgebras, BrokenAlgebrasStillLoad) {
  Json j = sl2_json();
  j["bracket"][0][3] = "-3";
  const QuasiBialgebra qb = quasi_bialgebra_from_json(j);
  EXPECT_FALSE(check_axioms(qb).jacobi.pass);
}

TEST(Doubles, RoundTrip) {
  for (const auto& e : catalog_entries()) {
    const DoubleAlgebra d = build_double(e.qb);
    const DoubleAlgebra back = double_from_json(parse_json(dump(double_to_json(d))));
    EXPECT_EQ(back.algebra(), d.algebra());
    EXPECT_EQ(back.q_matrix(), d.q_matrix());
    EXPECT_EQ(back.source(), d.source());
  }
}

TEST(HomData, RoundTripAndAlgebraField) {
  const CatalogEntry e = builtin("sl2_coboundary");
  for (const auto& d : e.data) {
    SCOPED_TRACE(d.label);
    const Json j = hom_datum_to_json(d, Json(e.name));
    const HomDatum back = hom_datum_from_json(j, e.qb);
    EXPECT_EQ(back.h, d.h);
    EXPECT_EQ(back.r, d.r);
    EXPECT_EQ(back.label, d.label);
    const Json inline_j = hom_datum_to_json(d, quasi_bialgebra_to_json(e.qb));
    EXPECT_EQ(hom_datum_from_json(inline_j, e.qb).r, d.r);
    EXPECT_THROW(hom_datum_from_json(inline_j, builtin("sl2_invariant_phi(1)").qb), ParseError);
  }
  // A name reference is informational only.
  const Json named = hom_datum_to_json(e.data.front(), Json("something_else"));
  EXPECT_NO_THROW(hom_datum_from_json(named, e.qb));
}

TEST(HomData, Rejections) {
  const QuasiBialgebra qb = builtin("sl2_coboundary").qb;
  for (const char* text : {R"({"r": []})", R"({"h": []})", R"({"h": [["1", "0"]], "r": []})",
                           R"({"h": [], "r": [[0, 1, "1"], [1, 0, "1"]]})", R"({"h": [], "r": [], "label": 3})",
                           R"([])"})
    EXPECT_THROW(hom_datum_from_json(Json::parse(text), qb), ParseError) << text;
}

TEST(PolynomialSystems, RoundTrip) {
  for (const auto& e : catalog_entries()) {
    SCOPED_TRACE(e.name);
    const PolynomialSystem sys = twist_equations(e.qb);
    const PolynomialSystem back = polynomial_system_from_json(parse_json(dump(polynomial_system_to_json(sys))));
    EXPECT_EQ(dump(polynomial_system_to_json(back)), dump(polynomial_system_to_json(sys)));
    Sampler s(11);
    const Tensor r = s.bivector(e.qb.dim());
    EXPECT_EQ(back.residual(r), sys.residual(r));
  }
  EXPECT_THROW(polynomial_system_from_json(Json::parse(R"({"unknowns": ["x"], "equations": []})")), ParseError);
}

TEST(Reports, VerdictShape) {
  EXPECT_EQ(verdict_to_json(Verdict::ok()), Json({{"pass", true}}));
  const Json f = verdict_to_json(Verdict::fail({1, 2}, Tensor::from_vector(vec({0, 3})), "boom"));
  EXPECT_EQ(f["pass"], false);
  EXPECT_EQ(f["witness"], Json::array({1, 2}));
  EXPECT_EQ(f["detail"], "boom");
  EXPECT_TRUE(f.contains("residual"));
}

TEST(Reports, ClassificationKeys) {
  const CatalogEntry e = builtin("manin_sl2_trace");
  for (const auto& d : e.data) {
    const Json j = classification_report_to_json(is_quasi_poisson_datum(d));
    for (const char* key : {"h_subalgebra", "stable", "obstruction_zero", "lagrangian", "meets_g_in_h", "subalgebra",
                            "verdict", "dirac_subspace"})
      EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Text, ParseAndDump) {
  EXPECT_THROW(parse_json(""), ParseError);
  EXPECT_THROW(parse_json("{"), ParseError);
  EXPECT_EQ(dump(Json({{"b", 1}, {"a", 2}})), "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}
