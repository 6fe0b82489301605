#include <gtest/gtest.h>

#include <string>

#include "nlr/crossed.hpp"
#include "nlr/ext.hpp"
#include "nlr/fixtures.hpp"
#include "nlr/io.hpp"
#include "nlr/rep.hpp"

namespace {

using namespace nlr;

std::string source(const std::string& rel) { return std::string(NLR_SOURCE_DIR) + "/" + rel; }

std::string error_of(const std::string& text) {
  try {
    parse_bundle_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string dual_text() { return dump_bundle(bundle_of(fixtures::dual())); }

TEST(Io, EveryAlgebraFixtureRoundTrips) {
  for (const auto& f : fixtures::all()) {
    const Bundle b = bundle_of(f.algebra);
    const Bundle back = parse_bundle_text(dump_bundle(b));
    EXPECT_TRUE(back == b) << f.name;
    EXPECT_EQ(dump_bundle(back), dump_bundle(b)) << f.name;
  }
}

TEST(Io, EveryCrossedFixtureRoundTrips) {
  for (const auto& f : fixtures::all_crossed()) {
    const Bundle b = bundle_of(f.module);
    const Bundle back = parse_bundle_text(dump_bundle(b));
    EXPECT_TRUE(back == b) << f.name;
    EXPECT_TRUE(verify_crossed(back.crossed_module()).ok() == verify_crossed(f.module).ok()) << f.name;
  }
}

TEST(Io, OptionalBlocksRoundTrip) {
  const NLieRinehart R = fixtures::nilp4();
  Bundle b = bundle_of(R);
  b.representation = adjoint_on_kernel(R);
  b.theta = theta_from_cochain(R, *b.representation, Matrix::identity(4));
  VectorMap phi = make_vector_map(3, 4, 1);
  phi.set({0, 1, 2}, Vector{Scalar(1, 3)});
  b.phi = phi;
  Matrix perm(4, 4);
  for (std::size_t i = 0; i < 4; ++i) perm((i + 1) % 4, i) = 1;
  b.equivalence = EquivalenceBlock{perm, Matrix::identity(4)};
  const Bundle back = parse_bundle_text(dump_bundle(b));
  EXPECT_TRUE(back == b);
  Bundle other = back;
  other.phi->set({0, 1, 2}, Vector{Scalar(1, 2)});
  EXPECT_FALSE(other == b);
}

TEST(Io, ScalarsAreRationalStrings) {
  VectorMap phi = make_vector_map(3, 4, 1);
  phi.set({0, 1, 3}, Vector{Scalar(-7, 3)});
  Bundle b = bundle_of(fixtures::nilp4());
  b.phi = phi;
  const json j = bundle_json(b);
  const json& row = j["phi"][0];
  ASSERT_EQ(row.size(), 5u);
  EXPECT_EQ(row[0], 0);
  EXPECT_EQ(row[1], 1);
  EXPECT_EQ(row[2], 3);
  EXPECT_EQ(row[3], 0);
  EXPECT_EQ(row[4], "-7/3");
}

TEST(Io, IntegerScalarsAreAccepted) {
  json j = bundle_json(bundle_of(fixtures::nilp4()));
  j["bracket"][0][4] = 1;
  EXPECT_TRUE(parse_bundle(j) == bundle_of(fixtures::nilp4()));
}

TEST(Io, CommittedFixturesMatchTheBuiltIns) {
  EXPECT_TRUE(load_bundle(source("fixtures/dual.json")) == bundle_of(fixtures::dual()));
  EXPECT_TRUE(load_bundle(source("fixtures/nilp4.json")) == bundle_of(fixtures::nilp4()));
  EXPECT_TRUE(load_bundle(source("fixtures/xm_incl.json")) == bundle_of(fixtures::xm_incl()));
}

TEST(Io, TruncatedInputIsAParseError) {
  const std::string t = dual_text();
  EXPECT_THROW(parse_bundle_text(t.substr(0, t.size() / 2)), ParseError);
  EXPECT_THROW(load_bundle(source("fixtures/truncated.json")), ParseError);
  EXPECT_THROW(load_bundle(source("fixtures/does_not_exist.json")), ParseError);
}

TEST(Io, ErrorsCarryAJsonPointer) {
  json j = bundle_json(bundle_of(fixtures::dual()));
  json bad = j;
  bad["bracket"][1][4] = "1/0";
  EXPECT_NE(error_of(bad.dump()).find("/bracket/1/4"), std::string::npos) << error_of(bad.dump());

  bad = j;
  bad["bracket"][0][2] = 4;
  EXPECT_NE(error_of(bad.dump()).find("/bracket/0/2: index out of range"), std::string::npos);

  bad = j;
  bad["bracket"][0][3] = 9;
  EXPECT_NE(error_of(bad.dump()).find("/bracket/0/3: target out of range"), std::string::npos);

  bad = j;
  bad["module"].erase("n");
  EXPECT_NE(error_of(bad.dump()).find("/module: missing field 'n'"), std::string::npos);

  bad = j;
  bad["base_algebra"]["unit"] = json::array({"1"});
  EXPECT_NE(error_of(bad.dump()).find("/base_algebra/unit"), std::string::npos);

  bad = j;
  bad["bracket"][0][0] = -1;
  EXPECT_NE(error_of(bad.dump()).find("/bracket/0/0"), std::string::npos);

  bad = j;
  bad["theta"] = json::array();
  EXPECT_NE(error_of(bad.dump()).find("/theta: theta requires a representation"), std::string::npos);

  EXPECT_NE(error_of("[1, 2]").find("/: expected a JSON object"), std::string::npos);
}

TEST(Io, RepeatedIndexWithNonzeroValueIsRejected) {
  json j = bundle_json(bundle_of(fixtures::dual()));
  j["bracket"].push_back(json::array({1, 1, 2, 0, "1"}));
  EXPECT_NE(error_of(j.dump()).find("repeated index"), std::string::npos);
}

TEST(Io, IndicesAreZeroBased) {
  const Bundle b = load_bundle(source("fixtures/dual.json"));
  // [u, v, tu] = -v is stored as [0, 1, 2, 1, "-1"]
  const Vector v = b.algebra.lie.at({0, 1, 2});
  EXPECT_EQ(v, scaled(-1, unit_vector(4, 1)));
}

}  // namespace
