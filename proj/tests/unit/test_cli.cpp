#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qmcshake/cli/app.hpp"
#include "qmcshake/cli/emit.hpp"
#include "qmcshake/cli/registry.hpp"

using namespace qmcshake;
using namespace qmcshake::cli;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "qmc-shake");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qmcshake_test_" + name);
}

}  // namespace

TEST(Registry, BuiltinIds) {
  const auto& r = IntegrandRegistry::builtin();
  for (const char* id : {"f1-nonsmooth", "f2-smooth", "linear-d", "product-x1x2"}) {
    EXPECT_TRUE(r.contains(id)) << id;
  }
  EXPECT_TRUE(r.contains("poly-file:/x"));
  EXPECT_FALSE(r.contains("f3"));
  EXPECT_THROW(r.make("f3"), ConfigError);
  EXPECT_EQ(r.make("linear-d", 6).dimension, 6u);
  EXPECT_NEAR(*r.make("f2-smooth").referent, 0.10897, 1e-5);
  EXPECT_NEAR(*r.make("f1-nonsmooth").referent, 7.22261, 1e-5);
  EXPECT_FALSE(r.make("f2-smooth").referent_note.empty());
  EXPECT_THROW(r.make("poly-file:/nonexistent.poly"), ConfigError);
  const auto model = r.make(std::string("poly-file:") + QMCSHAKE_MODEL_DIR + "/example-d4.poly");
  EXPECT_EQ(model.dimension, 4u);
}

TEST(Cli, IntegrateSmoothQmc) {
  const auto r = call({"integrate", "--method", "qmc-sobol", "--integrand", "f2-smooth",
                       "--n", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "method,n,rho,kappa,estimate,rel_err,rmse,time_s,seed");
  const auto f = split(ls[1]);
  ASSERT_EQ(f.size(), 9u);
  EXPECT_EQ(f[0], "qmc-sobol");
  EXPECT_EQ(f[1], "10000");
  EXPECT_LE(std::stod(f[5]), 5e-3);
  EXPECT_EQ(f[7], "");
}

TEST(Cli, IntegrateNonSmoothPlainMc) {
  const auto r = call({"integrate", "--method", "plain-mc", "--integrand", "f1-nonsmooth",
                       "--n", "1000", "--seed", "7", "--reps", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = split(lines(r.out)[1]);
  EXPECT_LE(std::stod(f[5]), 1e-2);
  EXPECT_EQ(f[8], "7");
}

TEST(Cli, UnknownMethodExitsTwoWithoutOutput) {
  const auto path = temp_file("unknown.csv");
  std::filesystem::remove(path);
  const auto r = call({"integrate", "--method", "mss9", "--n", "10", "--out", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(std::filesystem::exists(path));
  EXPECT_NE(r.err.find("mss9"), std::string::npos);
}

TEST(Cli, InvalidConfigExitsTwo) {
  EXPECT_EQ(call({"integrate", "--method", "plain-mc", "--integrand", "nope", "--n", "5"}).code, 2);
  EXPECT_EQ(call({"integrate", "--method", "mss1", "--n", "100"}).code, 2);
  EXPECT_EQ(call({"integrate", "--method", "mss1", "--n", "100", "--rho", "0.01",
                  "--kappa", "0.1"}).code, 2);
  EXPECT_EQ(call({"integrate", "--method", "mss2", "--n", "100", "--kappa", "0.1"}).code, 2);
  EXPECT_EQ(call({"converge", "--method", "plain-mc", "--budgets", "100,10,1000"}).code, 2);
  EXPECT_EQ(call({"integrate", "--method", "plain-mc", "--n", "5", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"integrate", "--method", "plain-mc", "--n", "5", "--bogus"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"sens", "--model", "/nonexistent.poly", "--n", "16"}).code, 2);
}

TEST(Cli, RuntimeFailureExitsOne) {
  const auto r = call({"integrate", "--method", "mss2", "--m", "10", "--rho", "0.2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("integrate"), std::string::npos);
}

TEST(Cli, ConvergeEmitsSlopeFooter) {
  const auto r = call({"converge", "--method", "plain-mc", "--integrand", "f2-smooth",
                       "--budgets", "100,1000,10000", "--reps", "10", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  ASSERT_EQ(ls.back().rfind("slope,", 0), 0u);
  const double slope = std::stod(ls.back().substr(6));
  EXPECT_NEAR(slope, -0.5, 0.3);
}

TEST(Cli, ConvergeConstantIsExact) {
  const auto path = temp_file("const.poly");
  std::ofstream(path) << "2 0\n3.5 0 0\n";
  const auto r = call({"converge", "--method", "mss2s", "--integrand",
                       "poly-file:" + path.string(), "--budgets", "2,8,32", "--reps", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).back(), "slope,exact");
}

TEST(Cli, SameCommandTwiceIsByteIdentical) {
  const auto a = temp_file("a.csv"), b = temp_file("b.csv");
  for (const auto& p : {a, b}) {
    const auto r = call({"integrate", "--method", "mss1", "--integrand", "f1-nonsmooth",
                         "--n", "2000", "--kappa", "0.3", "--reps", "4", "--seed", "11",
                         "--threads", "2", "--out", p.string()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {});
  const std::string sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
}

TEST(Cli, TimingFillsColumn) {
  const auto r = call({"integrate", "--method", "plain-mc", "--n", "100", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(split(lines(r.out)[1])[7], "");
}

TEST(Cli, JsonMirrorsCsv) {
  const auto r = call({"integrate", "--method", "mss2s", "--m", "4", "--reps", "3",
                       "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* key : {"\"method\"", "\"n\"", "\"rho\"", "\"kappa\"", "\"estimate\"",
                          "\"rel_err\"", "\"rmse\"", "\"time_s\"", "\"seed\""}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  }
}

TEST(Cli, TableFormat) {
  const auto r = call({"integrate", "--method", "mss1", "--n", "1000", "--rho", "0.0064",
                       "--reps", "3", "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0].substr(0, 6), "method");
  EXPECT_NE(ls[0].find("rel_err"), std::string::npos);
}

TEST(Cli, ConfigFileSuppliesDefaults) {
  const auto cfg = temp_file("run.ini");
  std::ofstream(cfg) << "method=mss2s\nm=5\nreps=2\nseed=9\n";
  const auto r = call({"integrate", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = split(lines(r.out)[1]);
  EXPECT_EQ(f[0], "mss2s");
  EXPECT_EQ(f[1], "1250");
  EXPECT_EQ(f[8], "9");
  const auto r2 = call({"integrate", "--config", cfg.string(), "--seed", "4"});
  EXPECT_EQ(split(lines(r2.out)[1])[8], "4");
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("QMC_SHAKE_SEED", "123", 1);
  const auto r = call({"integrate", "--method", "plain-mc", "--n", "10"});
  ::unsetenv("QMC_SHAKE_SEED");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(split(lines(r.out)[1])[8], "123");
}

TEST(Cli, ScrambleSelectsOwen) {
  const auto r = call({"integrate", "--method", "qmc-sobol", "--scramble", "owen",
                       "--scramble-seed", "5", "--n", "1024", "--reps", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = split(lines(r.out)[1]);
  EXPECT_EQ(f[0], "owen-qmc");
  EXPECT_EQ(f[8], "5");
}

TEST(Cli, SensReport) {
  const auto path = temp_file("sens.csv");
  const auto r = call({"sens", "--model", std::string(QMCSHAKE_MODEL_DIR) + "/example-d4.poly",
                       "--n", "4096", "--sampler", "qmc-sobol", "--subsets", "first-order,total",
                       "--subset", "1,2", "--seed", "3", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  const auto ls = lines(text);
  EXPECT_EQ(ls[0], "kind,target,value,std_error,flag");
  EXPECT_NE(text.find("S_first,1,"), std::string::npos);
  EXPECT_NE(text.find("S_tot,4,"), std::string::npos);
  EXPECT_NE(text.find("S_y,\"{1,2}\","), std::string::npos);
  EXPECT_NE(text.find("seed,,3,,"), std::string::npos);
}

TEST(Cli, SensUnknownSamplerExitsTwo) {
  EXPECT_EQ(call({"sens", "--integrand", "product-x1x2", "--n", "64", "--sampler", "mss2"}).code, 2);
}

TEST(Cli, Netcheck) {
  const auto r = call({"netcheck", "--dim", "2", "--m", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = split(lines(r.out)[1]);
  EXPECT_EQ(f[3], "0");
  EXPECT_EQ(f[4], "true");
  const auto s = call({"netcheck", "--dim", "3", "--m", "8", "--t", "1", "--scramble", "owen",
                       "--scramble-seed", "8"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(split(lines(s.out)[1])[4], "true");
}

TEST(Emit, CsvRowsAndFooter) {
  EstimatorReport r;
  r.method = "plain-mc";
  r.n_evals = 10;
  r.estimate = 0.5;
  r.relative_error = 0.25;
  r.seed = 4;
  const std::vector<EstimatorReport> rows{r};
  EXPECT_EQ(rows_csv(rows, false),
            "method,n,rho,kappa,estimate,rel_err,rmse,time_s,seed\n"
            "plain-mc,10,,,0.5,0.25,0,,4\n");
  EXPECT_EQ(rows_csv(rows, false), rows_csv(rows, false));
  ConvergenceReport c;
  c.rows.push_back({1, 10, 0.1, 0.1, r});
  c.slope = -0.5;
  EXPECT_NE(convergence_csv(c, false).find("\nslope,-0.5\n"), std::string::npos);
  EXPECT_EQ(format_double(0.1), "0.1");
}
