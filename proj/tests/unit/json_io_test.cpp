#include <pbundle/errors.hpp>
#include <pbundle/json_io.hpp>

#include <gtest/gtest.h>

namespace pbundle {
namespace {

SetupParams tango() { return verify_example(2, 3).front().first.params; }

TEST(JsonIntegerTest, SmallValuesAreNumbersLargeAreStrings) {
  EXPECT_TRUE(integer_to_json(Integer(42)).is_number_integer());
  const Integer big = Integer("123456789012345678901234567890");
  const Json j = integer_to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(integer_from_json(j, "x"), big);
  EXPECT_EQ(integer_from_json(integer_to_json(-big), "x"), -big);
  const Integer edge = Integer(1) << 53;
  EXPECT_TRUE(integer_to_json(edge).is_number_integer());
  EXPECT_TRUE(integer_to_json(edge + 1).is_string());
}

TEST(JsonIntegerTest, RejectsNonIntegers) {
  EXPECT_THROW(integer_from_json(Json(1.5), "x"), InvalidInput);
  EXPECT_THROW(integer_from_json(Json("12a"), "x"), InvalidInput);
  EXPECT_THROW(integer_from_json(Json(true), "x"), InvalidInput);
}

TEST(JsonParamsTest, RoundTrip) {
  const SetupParams p = tango();
  EXPECT_EQ(params_from_json(to_json(p)), p);
  SetupParams large = p;
  large.alpha = Integer("900000000000000000000");
  EXPECT_EQ(params_from_json(to_json(large)).alpha, large.alpha);
}

TEST(JsonParamsTest, RejectsUnknownKeysAndMissingVersion) {
  Json j = to_json(tango());
  j["extra"] = 1;
  EXPECT_THROW(params_from_json(j), InvalidInput);
  j = to_json(tango());
  j.erase("schema_version");
  EXPECT_THROW(params_from_json(j), InvalidInput);
  j = to_json(tango());
  j["schema_version"] = 2;
  EXPECT_THROW(params_from_json(j), InvalidInput);
  j = to_json(tango());
  j["flags"]["shiny"] = true;
  EXPECT_THROW(params_from_json(j), InvalidInput);
  j = to_json(tango());
  j.erase("tau");
  EXPECT_THROW(params_from_json(j), InvalidInput);
}

TEST(JsonParamsTest, FlagsDefaultFromAB) {
  Json j = to_json(tango());
  j.erase("flags");
  const SetupParams p = params_from_json(j);
  EXPECT_TRUE(p.flags.e_nonample);
  EXPECT_FALSE(p.flags.y_is_projective_space);
}

TEST(JsonQueryTest, RoundTrip) {
  EnumerationQuery q;
  q.n = {2, 5};
  q.alpha = IntRange{1, 30};
  q.hartshorne = true;
  q.constraints = std::vector<std::string>{"index_equation", std::string(kRankResidue)};
  q.threads = 3;
  const EnumerationQuery back = query_from_json(to_json(q));
  EXPECT_EQ(back.n, q.n);
  EXPECT_EQ(back.alpha, q.alpha);
  EXPECT_EQ(back.hartshorne, true);
  EXPECT_EQ(back.constraints, q.constraints);
  EXPECT_EQ(back.threads, 3);
  EXPECT_EQ(to_json(back), to_json(q));
}

TEST(JsonQueryTest, RejectsBadShapes) {
  EXPECT_THROW(query_from_json(Json{{"schema_version", 1}, {"n", 3}}), InvalidInput);
  EXPECT_THROW(query_from_json(Json{{"schema_version", 1}, {"bogus", 3}}), InvalidInput);
  EXPECT_THROW(query_from_json(Json{{"schema_version", 1}, {"threads", 0}}), InvalidInput);
  EXPECT_THROW(query_from_json(Json::array()), InvalidInput);
}

TEST(JsonResultTest, SurvivorDocumentShape) {
  EnumerationQuery q;
  q.n = {4, 4};
  q.r = {1, 6};
  q.d = {2, 2};
  q.cited_bounds = true;
  const Json j = to_json(enumerate(q));
  EXPECT_EQ(j.at("survivor_count"), j.at("survivors").size());
  ASSERT_FALSE(j.at("survivors").empty());
  const Json& s = j.at("survivors")[0];
  for (const char* key : {"key", "params", "report", "status", "tags"}) EXPECT_TRUE(s.contains(key)) << key;
  EXPECT_NO_THROW(params_from_json(s.at("params")));
}

TEST(JsonTextTest, ParseAndDump) {
  EXPECT_THROW(parse_json("{\"a\": ", "buf"), InvalidInput);
  const Json j = parse_json("{\"b\": 1, \"a\": [2]}", "buf");
  EXPECT_EQ(dump_json(j), "{\n  \"a\": [\n    2\n  ],\n  \"b\": 1\n}\n");
}

TEST(JsonCatalogTest, ExampleRecord) {
  const Json j = to_json(verify_example(3).front().first);
  EXPECT_EQ(j.at("key"), "ex3:k=6");
  EXPECT_EQ(j.at("bundle_rank"), 3);
  EXPECT_EQ(j.at("params").at("chern"), Json::array({1, 3, 6, 10}));
}

}  // namespace
}  // namespace pbundle
