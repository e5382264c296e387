#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "fibrekit/error.hpp"
#include "oracles.hpp"
#include "workbench/cli.hpp"
#include "workbench/report.hpp"
#include "workbench/word_text.hpp"

namespace fibrekit::workbench {
namespace {

const SurfaceSignature kTorus(1, 1);

ParseErrorCode parse_code(std::string_view text, const SurfaceSignature& s) {
  try {
    parse_word(text, s);
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return ParseErrorCode::UnknownToken;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

TEST(ParseWord, Instances) {
  const auto w = parse_word("a1 b1^-1", kTorus);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w.letters()[0], TwistLetter(HomologyClass::a(kTorus, 1), 1));
  EXPECT_EQ(w.letters()[1], TwistLetter(HomologyClass::b(kTorus, 1), -1));

  const auto v = parse_word("[1,0]^3", kTorus);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.letters()[0].exponent(), 3);
  EXPECT_EQ(v.letters()[0].curve(), HomologyClass::a(kTorus, 1));

  EXPECT_TRUE(parse_word("  ", kTorus).empty());
  EXPECT_EQ(parse_word("[ 2, -1 ]^+2", kTorus).letters()[0], TwistLetter(HomologyClass(kTorus, {2, -1}), 2));
  EXPECT_EQ(parse_word("d2", SurfaceSignature(0, 3)).letters()[0].curve(), HomologyClass::d(SurfaceSignature(0, 3), 2));
}

TEST(ParseWord, DistinctErrorCodes) {
  EXPECT_EQ(parse_code("a9", kTorus), ParseErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_code("a0", kTorus), ParseErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_code("d1", kTorus), ParseErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_code("x1", kTorus), ParseErrorCode::UnknownToken);
  EXPECT_EQ(parse_code("a", kTorus), ParseErrorCode::UnknownToken);
  EXPECT_EQ(parse_code("[1,0", kTorus), ParseErrorCode::UnknownToken);
  EXPECT_EQ(parse_code("[1,q]", kTorus), ParseErrorCode::UnknownToken);
  EXPECT_EQ(parse_code("a1^", kTorus), ParseErrorCode::MalformedExponent);
  EXPECT_EQ(parse_code("a1^0", kTorus), ParseErrorCode::MalformedExponent);
  EXPECT_EQ(parse_code("a1^x", kTorus), ParseErrorCode::MalformedExponent);
  EXPECT_EQ(parse_code("a1^99999999999999999999", kTorus), ParseErrorCode::MalformedExponent);
  EXPECT_EQ(parse_code("[1,0,0]", kTorus), ParseErrorCode::VectorLengthMismatch);
}

TEST(FormatWord, CanonicalRoundTrip) {
  EXPECT_EQ(format_word(parse_word("a1   b1^-1", kTorus)), "a1 b1^-1");
  EXPECT_EQ(format_word(parse_word("[1,0]^3 [1,1]", kTorus)), "a1^3 [1,1]");
  std::mt19937_64 rng(71);
  for (int g = 0; g <= 3; ++g) {
    const SurfaceSignature s(g, 3);
    for (int i = 0; i < 40; ++i) {
      const TwistWord w = oracle::random_word(s, rng, 6, 2, 9);
      const std::string text = format_word(w);
      EXPECT_EQ(parse_word(text, s), w) << text;
      EXPECT_EQ(format_word(parse_word(text, s)), text);
    }
  }
}

TEST(ParseHelpers, SurfaceAndRange) {
  EXPECT_EQ(parse_surface("2,1"), SurfaceSignature(2, 1));
  EXPECT_THROW(parse_surface("2"), UsageError);
  EXPECT_THROW(parse_surface("-1,1"), UsageError);
  EXPECT_EQ(parse_range("0..5").values().size(), 6u);
  EXPECT_EQ(parse_range("7").values(), (std::vector<std::int64_t>{7}));
  EXPECT_EQ(parse_range("-4..4:3").values(), (std::vector<std::int64_t>{-4, -1, 2}));
  EXPECT_THROW(parse_range("5..1"), UsageError);
  EXPECT_THROW(parse_range("0..5:0"), UsageError);
  EXPECT_EQ(parse_classes("a1 # comment b1\n b1\n", kTorus).size(), 2u);
}

TEST(Report, DerivationRoundTripsThroughJson) {
  const std::vector<Premise> twists{RationalBound::lower(Rational(1, 48), "scl(T_1)")};
  const auto chain = chain_lower(twists, RationalBound::lower(0, "scl(phi_0)"), korkmaz_lower(5), -1234);
  const Json text = Json::parse(to_json(*chain).dump());
  const auto back = derivation_from_json(text);
  EXPECT_TRUE(replay(*back));
  EXPECT_EQ(back->result, chain->result);
  EXPECT_EQ(to_json(*back).dump(), to_json(*chain).dump());
  EXPECT_EQ(to_json(*chain)["result"]["value"], "4271/336");
}

TEST(Cli, AlexanderTrefoil) {
  const auto r = run({"alexander", "--surface", "1,1", "--word", "a1 b1"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["poly"], "t^2 - t + 1");
  EXPECT_EQ(doc["delta_one"], "1");
  EXPECT_EQ(doc["classification"], "knot_compatible");
}

TEST(Cli, ExitCodes) {
  auto r = run({"alexander", "--surface", "1,1", "--word", "a9"});
  EXPECT_EQ(r.exit_code, kExitParse);
  EXPECT_EQ(Json::parse(r.err)["error"]["code"], "index_out_of_range");

  r = run({"bogus"});
  EXPECT_EQ(r.exit_code, kExitParse);
  EXPECT_EQ(Json::parse(r.err)["error"]["code"], "usage");

  r = run({"sclbound", "--korkmaz-genus", "2", "--n", "5"});
  EXPECT_EQ(r.exit_code, kExitPrecondition);
  EXPECT_EQ(Json::parse(r.err)["error"]["code"], "precondition");

  r = run({"heightlb", "--n", "10", "--model", "-1,0"});
  EXPECT_EQ(r.exit_code, kExitPrecondition);

  const auto classes = temp_file("fibrekit_pants_classes.txt", "d1\n");
  r = run({"twistlb", "--surface", "0,3", "--classes", classes.string()});
  EXPECT_EQ(r.exit_code, kExitPrecondition);

  r = run({"twistlb", "--surface", "1,1", "--classes", "/nonexistent/file"});
  EXPECT_EQ(r.exit_code, kExitParse);

  EXPECT_EQ(run({"--help"}).exit_code, kExitOk);
}

TEST(Cli, TwistlbCertificate) {
  const auto classes = temp_file("fibrekit_g2_classes.txt", "a1 b1\na2 # third\n");
  const auto r = run({"twistlb", "--surface", "2,1", "--classes", classes.string(), "--verify", "--word",
                      "a1 b1^-2 a2^3"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["status"], "certificate");
  EXPECT_EQ(doc["certificate"]["witness"], Json::parse(R"(["0","0","1","0"])"));
  EXPECT_EQ(doc["verification"]["words_checked"], 102);

  const auto full = temp_file("fibrekit_g1_full.txt", "a1 b1");
  const auto na = run({"twistlb", "--surface", "1,1", "--classes", full.string(), "--verify"});
  ASSERT_EQ(na.exit_code, kExitOk);
  EXPECT_EQ(Json::parse(na.out)["status"], "not_applicable");
}

TEST(Cli, SclboundAndHeightlb) {
  auto r = run({"sclbound", "--twist-bounds", "1/48,1/48", "--tc", "1/48", "--n", "480", "--verify"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["bound"]["value"], "169/24");

  r = run({"heightlb", "--fibre-b1", "2", "--n", "0", "--verify"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["rows"][0]["h_lb"], 0);
  EXPECT_EQ(doc["model"], "illustrative");

  r = run({"heightlb", "--surface", "0,3", "--n", "10000", "--model", "1,0", "--format", "tsv"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "n\th_lb\tmodel\n10000\t17\tuser_supplied\n");
}

TEST(Cli, PantsSweep) {
  const auto r = run({"pants", "--n", "0..5", "--verify"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 6u);
  const std::vector<bool> expected{false, true, false, true, true, true};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(doc["rows"][i]["obstructed"], expected[i]) << i;
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "fibrekit_out.json";
  std::filesystem::remove(path);
  const auto r = run({"pants", "--n", "3", "--out", path.string()});
  ASSERT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in)["rows"][0]["n"], 3);
}

}  // namespace
}  // namespace fibrekit::workbench
