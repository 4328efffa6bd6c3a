#include "test_support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "peircelab/json_io.hpp"

namespace peircelab {
namespace {

using namespace testing;

TEST(MatrixJson, RoundTrip) {
  auto g = rng(81);
  const ComplexMatrix a = rnd::ginibre(g, 2, 3);
  EXPECT_EQ(matrix_from_json(matrix_to_json(a)), a);
  // Text round trip keeps every bit.
  EXPECT_EQ(matrix_from_json(parse_json(matrix_to_json(a).dump())), a);
}

TEST(MatrixJson, NestedRows) {
  EXPECT_EQ(matrix_from_json(parse_json("[[0, 2], [0, 0]]")), rows({{0, 2}, {0, 0}}));
  EXPECT_EQ(matrix_from_json(parse_json("[[[1, -1], 0]]")), rows({{Complex(1, -1), 0}}));
}

TEST(MatrixJson, Errors) {
  auto code = [](const std::string& text) {
    try {
      matrix_from_json(parse_json(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kUnknownProperty;
  };
  EXPECT_EQ(code(R"({"rows": 2, "cols": 2, "data": [[1, 0]]})"), ErrorCode::kShapeMismatch);
  EXPECT_EQ(code(R"({"rows": 1, "cols": 1, "data": [["x", 0]]})"), ErrorCode::kInvalidInput);
  EXPECT_EQ(code(R"({"rows": 0, "cols": 1, "data": []})"), ErrorCode::kInvalidInput);
  EXPECT_EQ(code("[[1, 2], [3]]"), ErrorCode::kShapeMismatch);
  EXPECT_EQ(code("3"), ErrorCode::kInvalidInput);
}

TEST(ModelJson, RoundTripAndValidation) {
  for (const TripleModel m : {TripleModel::rect(2, 3), TripleModel::cstar(4), TripleModel::jbstar(2)})
    EXPECT_EQ(model_from_json(model_to_json(m)), m);
  EXPECT_THROW(model_from_json(parse_json(R"({"kind": "cstar", "m": 2, "n": 3})")), Error);
  EXPECT_THROW(model_from_json(parse_json(R"({"kind": "lie", "m": 2, "n": 2})")), Error);
}

TEST(SubspaceJson, RoundTrip) {
  const ComplexMatrix parts[] = {E(2, 1, 1), E(2, 1, 2) + E(2, 2, 1)};
  const Subspace s = Subspace::span({2, 2}, parts);
  const Subspace back = subspace_from_json(subspace_to_json(s), {2, 2});
  EXPECT_TRUE(same_subspace(s, back, 1e-14));
}

TEST(ReadJsonFile, MissingFileIsInputError) {
  try {
    read_json_file("/nonexistent/peircelab/input.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
}

TEST(WitnessJson, Fields) {
  WitnessReport r;
  r.witness = I(2);
  r.residuals["a"] = 0.5;
  r.verified = true;
  r.seed = 3;
  const Json j = witness_to_json(r);
  EXPECT_TRUE(j.at("verified").get<bool>());
  EXPECT_EQ(j.at("residuals").at("a").get<double>(), 0.5);
  EXPECT_EQ(matrix_from_json(j.at("witness")), I(2));
}

}  // namespace
}  // namespace peircelab
