#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <unistd.h>

#include "noisedim/cli.hpp"

using namespace noisedim;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "noisedim");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("noisedim_cli_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"entropy", "--format", "fp12"}).code, 2);
  EXPECT_EQ(run({"entropy", "--samples", "many"}).code, 2);
  EXPECT_EQ(run({"curve"}).code, 2);
  EXPECT_EQ(run({"bounds", "--bytes", "10"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).out, std::string(kToolVersion) + "\n");
}

TEST(Cli, EntropyExactRecord) {
  const Result r = run({"entropy", "--format", "fp16", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "entropy");
  EXPECT_EQ(j["tool_version"], kToolVersion);
  EXPECT_EQ(j["outputs"]["method"], "exact");
  EXPECT_EQ(j["outputs"]["std_error"], 0.0);
  EXPECT_NEAR(j["outputs"]["bits_per_dim"].get<double>(), 13.4637230415419, 1e-11);
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_EQ(run({"entropy", "--format", "fp64", "--exact"}).code, 1);
}

TEST(Cli, CustomFormatAlias) {
  const Result custom = run({"entropy", "--format", "custom", "8:23", "--samples", "1000", "--seed", "3"});
  const Result named = run({"entropy", "--format", "fp32", "--samples", "1000", "--seed", "3"});
  ASSERT_EQ(custom.code, 0) << custom.err;
  EXPECT_EQ(custom.out, named.out);
  const Json j = Json::parse(custom.out);
  EXPECT_EQ(j["parameters"]["format"]["name"], "fp32");
  const Json big = Json::parse(run({"entropy", "--format", "fp32", "--samples", "100000", "--seed", "3"}).out);
  EXPECT_GT(j["outputs"]["std_error"].get<double>(), big["outputs"]["std_error"].get<double>());
}

TEST(Cli, EntropyIsByteIdenticalAcrossThreads) {
  const Result a = run({"entropy", "--format", "fp32", "--samples", "200000", "--seed", "5", "--threads", "1"});
  const Result b = run({"entropy", "--format", "fp32", "--samples", "200000", "--seed", "5", "--threads", "4"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BoundsWithReferenceConstants) {
  for (const auto& [bytes, fmt, want] : std::vector<std::tuple<std::string, std::string, int>>{
           {"1576", "fp32", 475}, {"62940", "fp64", 9063}, {"62940", "fp16", 44324}}) {
    const Result r = run({"bounds", "--bytes", bytes, "--format", fmt, "--paper-constants"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["outputs"]["bound"]["n_required"], want);
  }
  const Result alias = run({"bounds", "--bytes", "1576", "--format", "fp32", "--reference-constants"});
  EXPECT_EQ(Json::parse(alias.out)["outputs"]["bound"]["n_required"], 475);
}

TEST(Cli, BoundsRejectsZeroSize) {
  const Result r = run({"bounds", "--bytes", "0", "--format", "fp32", "--paper-constants"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("positive"), std::string::npos);
}

TEST(Cli, BoundsUnitsAndEntropy) {
  const Result bits = run({"bounds", "--bytes", "12608", "--unit", "bits", "--entropy-bits", "26.55"});
  ASSERT_EQ(bits.code, 0) << bits.err;
  EXPECT_EQ(Json::parse(bits.out)["outputs"]["bound"]["n_required"], 475);
  const Result exact = run({"bounds", "--bytes", "1576", "--format", "fp16"});
  ASSERT_EQ(exact.code, 0) << exact.err;
  EXPECT_EQ(Json::parse(exact.out)["parameters"]["entropy_source"], "exact");
  EXPECT_EQ(Json::parse(exact.out)["outputs"]["bound"]["n_required"], 937);
}

TEST(Cli, BoundsFromManifestAndScan) {
  const fs::path dir = scratch("bounds");
  fs::create_directories(dir / "imgs");
  for (int i = 0; i < 3; ++i) std::ofstream(dir / "imgs" / ("i" + std::to_string(i) + ".jxl")) << std::string(1000 * (i + 1), 'x');
  const Result scan = run({"scan", (dir / "imgs").string(), "--extensions", ".jxl", "--write-manifest",
                           (dir / "m.csv").string()});
  ASSERT_EQ(scan.code, 0) << scan.err;
  EXPECT_EQ(Json::parse(scan.out)["outputs"]["mean_bytes"], 2000.0);

  const Result a = run({"bounds", "--manifest", (dir / "m.csv").string(), "--entropy-bits", "16"});
  const Result b = run({"bounds", "--scan", (dir / "imgs").string(), "--extensions", "jxl", "--entropy-bits", "16"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(Json::parse(a.out)["outputs"]["bound"]["n_required"], 1000);
  EXPECT_EQ(Json::parse(b.out)["outputs"]["bound"]["n_required"], 1000);
  EXPECT_EQ(run({"scan", (dir / "empty").string()}).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, CurveCsvAndJson) {
  const Result csv = run({"curve", "--masses", "0.6,0.3,0.1", "--eps-start", "0.1", "--eps-end", "1.0",
                          "--eps-step", "0.1"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 11);

  const Result json = run({"curve", "--masses", "0.6 0.3 0.1", "--eps-start", "0.1", "--eps-end", "1.0",
                           "--eps-step", "0.1", "--json", "--divergence", "js"});
  ASSERT_EQ(json.code, 0) << json.err;
  const Json j = Json::parse(json.out);
  EXPECT_EQ(j["parameters"]["solver"]["divergence"], "js");
  EXPECT_EQ(j["outputs"]["points"].size(), 10u);

  EXPECT_EQ(run({"curve", "--masses", "0.6,0.3"}).code, 2);
  EXPECT_EQ(run({"curve", "--masses", "0.5,0.5", "--divergence", "hellinger"}).code, 2);
}

TEST(Curve, SingleEpsilonAtEntropy) {
  const fs::path file = scratch("dist.txt");
  std::ofstream(file) << "0.5\n0.5\n";
  const Result r = run({"curve", "--dist", file.string(), "--eps-start", "1", "--eps-end", "1", "--eps-step", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(row.substr(0, 2), "1,");
  const double d = std::stod(row.substr(2, row.find(',', 2) - 2));
  EXPECT_LE(d, 1e-6);
  fs::remove(file);
}

TEST(Cli, CurveByteIdenticalAcrossThreads) {
  const std::vector<std::string> base{"curve", "--masses", "0.57,0.21,0.10,0.05,0.035,0.02,0.015"};
  auto with_threads = [&](const std::string& t) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    return run(args).out;
  };
  EXPECT_EQ(with_threads("1"), with_threads("5"));
}

TEST(Cli, ReproduceTable3AndCurveOnly) {
  const fs::path dir = scratch("reproduce");
  const Result r = run({"reproduce", "--out", dir.string(), "--tables", "3,curve"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir / "table3.csv"), "format,CIFAR10,LSUN-Church\nfp16,1110,44324\nfp32,475,18965\nfp64,227,9063\n");
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 10);
  const Json run_json = Json::parse(slurp(dir / "run.json"));
  EXPECT_TRUE(run_json["outputs"]["all_passed"].get<bool>());
  EXPECT_EQ(run_json["parameters"]["tables"], Json::array({"3", "curve"}));
  const std::string curve = slurp(dir / "toy_curve.csv");
  EXPECT_EQ(std::count(curve.begin(), curve.end(), '\n'), 41);
  EXPECT_EQ(run({"reproduce", "--out", dir.string(), "--tables", "2"}).code, 2);
  fs::remove_all(dir);
}
