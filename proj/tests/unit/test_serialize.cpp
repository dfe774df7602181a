#include <gtest/gtest.h>

#include <random>

#include "setalg/serialize.hpp"
#include "support/oracles.hpp"

using namespace setalg;

TEST(Serialize, SetFunctionShape) {
  SetFunction f(4, 2);
  f.set(Subset::of({0, 3}), make_rational(-7, 3));
  const Json j = set_function_to_json(f);
  EXPECT_EQ(j.dump(), R"({"degree":2,"ground_size":4,"terms":[{"den":"3","num":"-7","set":[0,3]}]})");
  EXPECT_EQ(set_function_from_json(j), f);
}

TEST(Serialize, SetFunctionRoundTrip) {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 30; ++trial) {
    const int l = 1 + static_cast<int>(rng() % 8);
    const SetFunction f = oracle::random_function(l, static_cast<int>(rng() % (l + 1)), rng);
    const Json j = set_function_to_json(f);
    ASSERT_EQ(set_function_from_json(Json::parse(j.dump())), f);
  }
}

TEST(Serialize, RejectsMalformedInput) {
  EXPECT_THROW(set_function_from_json(Json::parse(R"({"ground_size":3,"degree":1})")), Error);
  EXPECT_THROW(set_function_from_json(Json::parse(
                   R"({"ground_size":3,"degree":1,"terms":[{"set":[5],"num":"1","den":"1"}]})")),
               Error);
  EXPECT_THROW(rational_from_json(Json::parse(R"({"num":"1","den":"0"})")), Error);
  EXPECT_THROW(structure_from_json(Json::parse(R"({"base_size":3,"signature":[2],"relations":[]})")), Error);
}

TEST(Serialize, StructureRoundTrip) {
  RelStructure r(4, {2, 1});
  r.add_tuple(0, {0, 1});
  r.add_tuple(0, {2, 3});
  r.add_tuple(1, {3});
  const Json j = structure_to_json(r);
  EXPECT_EQ(j.dump(), R"({"base_size":4,"relations":[[[0,1],[2,3]],[[3]]],"signature":[2,1]})");
  EXPECT_EQ(structure_from_json(j), r);
}

TEST(Serialize, WordAsLetterMasks) {
  const Word w(std::vector<Letter>{3, 1});
  EXPECT_EQ(word_to_json(w).dump(), "[3,1]");
  EXPECT_EQ(word_from_json(Json::parse("[3,1]")), w);
  EXPECT_THROW(word_from_json(Json::parse("[0]")), Error);
}

TEST(Serialize, CertificateFields) {
  const WitnessCertificate c = verify(two_squares(), 7);
  const Json j = certificate_to_json(c);
  EXPECT_EQ(j.at("tau"), 7);
  EXPECT_EQ(j.at("formula_expected"), 7);
  EXPECT_EQ(j.at("match"), true);
  EXPECT_EQ(j.at("tau_witness").size(), 7U);
  const WitnessPair back = pair_from_certificate_json(j);
  EXPECT_EQ(back.f(), c.pair.f());
  EXPECT_EQ(back.g(), c.pair.g());
  EXPECT_TRUE(certificate_to_json(verify(two_squares())).at("formula_expected").is_null());
}
