#include <gtest/gtest.h>

#include <sstream>

#include "levywn/errors.hpp"
#include "levywn/json_io.hpp"

namespace levywn {
namespace {

TEST(NoiseJson, RoundTripsEveryKind) {
  const std::vector<std::string> docs{
      R"({"gamma":0.5,"sigma2":1,"nu":{"kind":"zero"}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"discrete","atoms":[[-1,0.5],[2,0.25]]}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"stable","alpha":1.5,"c":2}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"laplace","tau":1,"sigma2":2}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"compound_poisson","lambda":3,"jumps":{"kind":"two_point","a":1,"p":0.25}}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"compound_poisson","lambda":1,"jumps":{"kind":"gaussian","mean":0.5,"variance":2}}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"compound_poisson","lambda":1,"jumps":{"kind":"uniform","lo":-1,"hi":3}}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"compound_poisson","lambda":1,"jumps":{"kind":"discrete","values":[1,2],"probs":[0.5,0.5]}}})",
      R"({"gamma":0,"sigma2":0,"nu":{"kind":"sum","terms":[{"kind":"stable","alpha":1,"c":1},{"kind":"laplace","tau":2,"sigma2":1}]}})",
  };
  for (const auto& text : docs) {
    const Json j = Json::parse(text);
    const LevyTriplet t = triplet_from_json(j);
    const Json back = to_json(t);
    EXPECT_EQ(to_json(triplet_from_json(back)).dump(), back.dump()) << text;
    EXPECT_EQ(Json::parse(back.dump()), Json::parse(Json::parse(text).dump())) << text;
  }
}

TEST(NoiseJson, Defaults) {
  const LevyTriplet t = triplet_from_json(Json::parse(R"({"sigma2":2})"));
  EXPECT_EQ(t.gamma, 0.0);
  EXPECT_EQ(t.sigma2, 2.0);
  EXPECT_TRUE(t.nu.holds<ZeroMeasure>());
  const LevyTriplet s = triplet_from_json(Json::parse(R"({"nu":{"kind":"stable","alpha":0.5}})"));
  EXPECT_EQ(s.nu.get_if<StableTail>()->alpha, 0.5);
  EXPECT_EQ(s.nu.get_if<StableTail>()->c, 1.0);
}

TEST(NoiseJson, StableCharacteristicScale) {
  for (double alpha : {0.5, 1.0, 1.5}) {
    Json j{{"nu", Json{{"kind", "stable"}, {"alpha", alpha}, {"cf_scale", 2.0}}}};
    const LevyTriplet t = triplet_from_json(j);
    EXPECT_NEAR(levy_exponent(t, 0.75).real(), -std::pow(1.5, alpha), 1e-12) << alpha;
  }
  EXPECT_THROW(triplet_from_json(Json::parse(R"({"nu":{"kind":"stable","c":1,"cf_scale":1}})")), SchemaError);
  EXPECT_THROW(triplet_from_json(Json::parse(R"({"nu":{"kind":"stable","cf_scale":0}})")), SchemaError);
}

TEST(NoiseJson, Rejections) {
  auto path_of = [](const std::string& text) {
    try {
      triplet_from_json(Json::parse(text));
    } catch (const SchemaError& e) {
      return e.path();
    }
    return std::string("<accepted>");
  };
  EXPECT_EQ(path_of(R"({"sigma2":-1})"), "");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"stable","alpha":2.5}})"), "nu");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"stable","alpha":"x"}})"), "nu.alpha");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"stable","beta":1}})"), "nu.beta");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"cauchy"}})"), "nu.kind");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"discrete","atoms":[[0,1]]}})"), "nu");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"discrete","atoms":[[1]]}})"), "nu.atoms[0]");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"compound_poisson","jumps":{"kind":"two_point","p":2}}})"), "nu.jumps");
  EXPECT_EQ(path_of(R"({"nu":{"kind":"sum","terms":[{"kind":"zero"},{"kind":"stable","alpha":3}]}})"),
            "nu.terms[1]");
  EXPECT_EQ(path_of(R"([1,2])"), "");
  EXPECT_THROW(to_json(LevyMeasure(GenericDensity{[](double) { return 0.0; }})), InvalidArgument);
}

TEST(FunctionJson, RoundTripsEveryKind) {
  const std::vector<std::string> docs{
      R"({"kind":"indicator","box":{"lo":[0],"hi":[1]}})",
      R"({"kind":"indicator","ball":{"center":[0,1],"radius":2},"value":3})",
      R"({"kind":"power_law","alpha":0.25,"beta":4,"dimension":1})",
      R"({"kind":"ou","theta":2,"amplitude":-1})",
      R"({"kind":"mollified","box":{"lo":[0,0],"hi":[1,2]},"n":8})",
      R"({"kind":"bump","dimension":2,"dilation":2,"shift":[1,-1]})",
      R"({"kind":"grid","box":{"lo":[0],"hi":[1]},"shape":[4],"values":[1,2,3,4],"exact_support":false})",
  };
  for (const auto& text : docs) {
    const TestFunction f = test_function_from_json(Json::parse(text));
    const Json back = to_json(f);
    const TestFunction g = test_function_from_json(back);
    EXPECT_EQ(to_json(g).dump(), back.dump()) << text;
    std::vector<double> t(f.dimension(), 0.375);
    EXPECT_EQ(f(t), g(t)) << text;
  }
}

TEST(FunctionJson, AffineChange) {
  const TestFunction f =
      test_function_from_json(Json::parse(R"({"kind":"ou","theta":1,"amplitude":2,"dilation":3,"shift":[1]})"));
  // 2 e^{-3(t-1)} for t >= 1.
  EXPECT_DOUBLE_EQ(f(2.0), 2.0 * std::exp(-3.0));
  EXPECT_EQ(f(0.5), 0.0);
}

TEST(FunctionJson, Rejections) {
  EXPECT_THROW(test_function_from_json(Json::parse(R"({"kind":"indicator"})")), SchemaError);
  EXPECT_THROW(test_function_from_json(Json::parse(R"({"kind":"indicator","box":{"lo":[1],"hi":[0]}})")),
               SchemaError);
  EXPECT_THROW(test_function_from_json(Json::parse(R"({"kind":"bump","dimension":-1})")), SchemaError);
  EXPECT_THROW(test_function_from_json(Json::parse(R"({"kind":"bump","dilation":0})")), SchemaError);
  EXPECT_THROW(test_function_from_json(Json::parse(R"({"kind":"bump","shift":[1,2]})")), SchemaError);
  EXPECT_THROW(test_function_from_json(Json::parse(R"({"kind":"bump","color":1})")), SchemaError);
  EXPECT_THROW(test_function_from_json(Json::parse(R"({"kind":"grid","box":{"lo":[0],"hi":[1]},"shape":[3],"values":[1]})")),
               SchemaError);
}

TEST(Documents, ParseInlineAndMalformed) {
  EXPECT_EQ(parse_document(R"( {"a":1})")["a"], 1);
  EXPECT_THROW(parse_document("{\"a\":"), SchemaError);
  EXPECT_THROW(parse_document("/nonexistent/noise.json"), SchemaError);
  EXPECT_THROW(parse_document("  "), SchemaError);
}

TEST(Documents, ExtendedAndFormatting) {
  EXPECT_EQ(to_json(Extended::finite(0.5)).dump(), R"({"finite":true,"value":0.5})");
  EXPECT_EQ(to_json(Extended::infinite("tail")).dump(), R"({"finite":false,"divergence":"tail"})");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(ResultSchema, AcceptsAndRejects) {
  Json doc{{"subcommand", "check-left-inverse"},
           {"theta", 1.0},
           {"kernel", to_json(TestFunction(OUKernel{1.0}))},
           {"h", {0.02, 0.01}},
           {"residuals", {4e-4, 1e-4}},
           {"ratios", {4.0}},
           {"converges", true}};
  EXPECT_NO_THROW(validate_result("check-left-inverse", doc));
  Json extra = doc;
  extra["note"] = "x";
  EXPECT_THROW(validate_result("check-left-inverse", extra), SchemaError);
  Json missing = doc;
  missing.erase("theta");
  EXPECT_THROW(validate_result("check-left-inverse", missing), SchemaError);
  Json mismatch = doc;
  mismatch["residuals"] = {1.0};
  EXPECT_THROW(validate_result("check-left-inverse", mismatch), SchemaError);
  EXPECT_THROW(validate_result("exponent", doc), SchemaError);
  EXPECT_THROW(validate_result("plot", doc), SchemaError);
  EXPECT_EQ(result_subcommands().size(), 9u);
}

TEST(ResultSchema, NestedDocumentsMustParse) {
  Json doc{{"subcommand", "moments"},
           {"noise", Json{{"gamma", 0}, {"sigma2", -1}}},
           {"p", 1.0},
           {"q", 2.0},
           {"moment", to_json(Extended::finite(1.0))},
           {"finite_mass", true},
           {"pruitt_index", 2.0},
           {"blumenthal_getoor_index", 0.0}};
  EXPECT_THROW(validate_result("moments", doc), SchemaError);
  doc["noise"] = to_json(LevyTriplet{});
  EXPECT_NO_THROW(validate_result("moments", doc));
  doc["moment"] = Json{{"finite", false}};
  EXPECT_THROW(validate_result("moments", doc), SchemaError);
}

TEST(Csv, SamplesAndPaths) {
  SampleBatch b;
  b.values = {0.5, -1.25};
  b.n = 2;
  b.seed = 7;
  b.stream_id = 3;
  b.eps_cutoff = 0.001;
  std::ostringstream os;
  write_samples_csv(os, b, {"noise={}"});
  EXPECT_EQ(os.str(), "# seed=7\n# stream_id=3\n# n=2\n# eps_cutoff=0.001\n# noise={}\nvalue\n0.5\n-1.25\n");

  ProcessPath p;
  p.grid = {{0.5, 1.0}, {2.0}};
  p.values = {1.0, 2.0};
  std::ostringstream ps;
  write_paths_csv(ps, {p, p}, {});
  EXPECT_EQ(ps.str(), "path,t1,t2,value\n0,0.5,2,1\n0,1,2,2\n1,0.5,2,1\n1,1,2,2\n");
  ProcessPath q;
  q.grid = {{0.0, 1.0}};
  q.values = {0.0, 3.0};
  std::ostringstream qs;
  write_paths_csv(qs, {q}, {"seed=1"});
  EXPECT_EQ(qs.str(), "# seed=1\npath,t,value\n0,0,0\n0,1,3\n");
}

}  // namespace
}  // namespace levywn
