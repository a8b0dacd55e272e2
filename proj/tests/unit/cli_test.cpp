// Copyright 2026 The opgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "opgrid/cli/cli.hpp"
#include "opgrid/errors.hpp"
#include "opgrid/grids/grid.hpp"
#include "opgrid/io/serialize.hpp"
#include "opgrid/random.hpp"
#include "support/oracles.hpp"

using namespace opgrid;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Runs the installed binary and returns (exit code, stdout).
std::pair<int, std::string> run_binary(const std::string& args) {
  const std::string cmd = std::string(OPGRID_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("opgrid_cli_test_" + name);
}

}  // namespace

TEST(Serialize, ScalarFormat) {
  const io::Json j = io::to_json(ExactScalar::from_fractions(-3, 4, 5, 1));
  EXPECT_EQ(j.dump(), R"({"re":{"num":"-3","den":"4"},"im":{"num":"5","den":"1"}})");
  EXPECT_EQ(io::scalar_from_json(j), ExactScalar::from_fractions(-3, 4, 5, 1));
  EXPECT_THROW(io::scalar_from_json(io::Json::parse(R"({"re":{"num":"1","den":"0"},"im":{"num":"0","den":"1"}})")),
               ArgumentError);
  EXPECT_THROW(io::scalar_from_json(io::Json::parse(R"({"re":{"num":"x","den":"1"},"im":{"num":"0","den":"1"}})")),
               ArgumentError);
}

TEST(SerializeProperty, MatrixRoundTrip) {
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    const ExactMatrix m = random_exact(uniform_int(rng, 1, 6), uniform_int(rng, 1, 6), rng, 1000);
    const io::Json j = io::to_json(m);
    EXPECT_EQ(j["rows"], m.rows());
    EXPECT_EQ(j["entries"].size(), static_cast<std::size_t>(m.rows()));
    EXPECT_EQ(io::matrix_from_json(io::Json::parse(j.dump())), m);
  }
  EXPECT_THROW(io::matrix_from_json(io::Json::parse(R"({"rows":1,"cols":2,"entries":[[]]})")), ArgumentError);
  EXPECT_THROW(io::matrix_from_json(io::Json::parse(R"({"rows":1})")), ArgumentError);
}

TEST(Serialize, ConstructionRoundTrip) {
  for (const std::string kind : {"hnk", "spin", "diag-rect"}) {
    cli::Params p;
    p.n = 4;
    p.k = 2;
    p.r = 2;
    p.odd = true;
    p.p = 2;
    p.q = 3;
    const io::Construction c = cli::construct(kind, p);
    const io::Construction back = io::construction_from_json(io::Json::parse(io::to_json(c).dump()));
    EXPECT_EQ(io::to_json(back), io::to_json(c));
    const Grid g = io::to_grid(back);
    EXPECT_EQ(g.matrices(), io::to_grid(c).matrices());
  }
  EXPECT_THROW(io::to_grid(cli::construct("spin-system", cli::Params{.n = 0, .k = 3, .p = 0, .q = 0, .m = 0, .r = 0, .odd = false, .ks = {}})), ArgumentError);
}

TEST(Serialize, Formats) {
  EXPECT_EQ(io::format_double(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(io::format_double(-0.5), "-0.5");
  const std::string p = io::pretty(oracle::mat({{1, -1}, {0, 10}}));
  EXPECT_EQ(p, "  [  1 -1 ]\n  [  0 10 ]\n");
  EXPECT_EQ(io::pretty(ExactMatrix::Constant(1, 2, ExactScalar::from_fractions(-1, 2))), "  [ -1/2 -1/2 ]\n");
}

TEST(Cli, ConstructExamples) {
  const Result e1 = run({"construct", "hnk", "--n", "3", "--k", "2", "--format", "pretty"});
  EXPECT_EQ(e1.code, 0);
  EXPECT_NE(e1.out.find("u1 (3x3)\n  [  0  0  0 ]\n  [  0  0  1 ]\n  [  0 -1  0 ]\n"), std::string::npos) << e1.out;
  EXPECT_NE(e1.out.find("u3 (3x3)\n  [  0  1  0 ]\n  [ -1  0  0 ]\n  [  0  0  0 ]\n"), std::string::npos);

  const Result trivial = run({"construct", "hnk", "--n", "1", "--k", "1"});
  EXPECT_EQ(trivial.code, 0);
  EXPECT_NE(trivial.out.find("u1 (1x1)\n  [ 1 ]\n"), std::string::npos);

  const Result spin = run({"construct", "spin-system", "--k", "4", "--format", "json"});
  ASSERT_EQ(spin.code, 0);
  const io::Construction c = io::construction_from_json(io::Json::parse(spin.out));
  ASSERT_EQ(c.matrices.size(), 4u);
  const auto want = spin_system(4);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(c.matrices[i].mat.rows(), 4);
    EXPECT_EQ(c.matrices[i].mat, want[i]);
  }

  const Result csv = run({"construct", "spin", "--r", "2", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("matrix,row,col,re,im\n", 0), 0u);
}

TEST(Cli, HnkJsonCarriesCombinations) {
  const Result r = run({"construct", "hnk", "--n", "4", "--k", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const io::Json j = io::Json::parse(r.out);
  EXPECT_EQ(j["col_combinations"].dump(), "[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]");
  EXPECT_EQ(j["row_combinations"].dump(), "[[1],[2],[3],[4]]");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"construct", "nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run({"construct", "hnk", "--n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"construct", "hnk", "--n", "3", "--k", "5"}).code, cli::kUsage);
  EXPECT_EQ(run({"construct", "hnk", "--n", "3", "--k", "2", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"construct", "hnk", "--n", "9", "--k", "2"}).code, cli::kCapacity);
  EXPECT_EQ(run({"verify", "uij-grid", "--n", "6", "--k", "3"}).code, cli::kCapacity);
  EXPECT_EQ(run({"construct", "spin-system", "--k", "20"}).code, cli::kCapacity);
  EXPECT_EQ(run({"--help"}).code, cli::kPass);
  const Result usage = run({"construct", "hnk"});
  EXPECT_NE(usage.err.find("requires --n and --k"), std::string::npos);
  EXPECT_TRUE(usage.out.empty());
}

TEST(Cli, VerifyExamples) {
  EXPECT_EQ(run({"verify", "hnk", "--n", "4", "--k", "3"}).code, cli::kPass);
  const Result proj = run({"verify", "projection", "--n", "5", "--k", "2", "--samples", "1000", "--seed", "7"});
  EXPECT_EQ(proj.code, cli::kPass) << proj.out;
  EXPECT_EQ(run({"verify", "uij-grid", "--n", "5", "--k", "3"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "split", "--n", "3", "--ks", "2,1"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "split", "--p", "3", "--q", "2"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "matrix-units", "--kind", "symplectic", "--m", "5"}).code, cli::kPass);
  EXPECT_EQ(run({"verify", "matrix-units", "--kind", "spin", "--r", "2", "--odd"}).code, cli::kPass);
  const Result trace = run({"verify", "trace", "--n", "4", "--k", "2", "--format", "json"});
  EXPECT_EQ(trace.code, cli::kPass);
  const io::Json t = io::Json::parse(trace.out);
  EXPECT_EQ(t["status"], "pass");
  EXPECT_EQ(t["flagged"], 1);
  EXPECT_FALSE(t.contains("elapsed_ms"));
  const Result timed = run({"verify", "hnk", "--n", "3", "--k", "2", "--format", "json", "--timing"});
  EXPECT_TRUE(io::Json::parse(timed.out).contains("elapsed_ms"));
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"verify", "projection", "--n", "4", "--k", "2", "--samples", "50", "--seed", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> trace = {"verify", "trace", "--n", "5", "--k", "3", "--seed", "11"};
  EXPECT_EQ(run(trace).out, run(trace).out);
  const std::vector<std::string> other = {"verify", "trace", "--n", "5", "--k", "3", "--seed", "12"};
  EXPECT_NE(run(trace).out, run(other).out);
}

TEST(Cli, JsonRoundTripGivesIdenticalReports) {
  const std::vector<std::vector<std::string>> kinds = {
      {"hnk", "--n", "4", "--k", "2"}, {"spin", "--r", "3"}, {"hermitian", "--m", "4"}, {"diag-hnk", "--n", "3", "--ks", "2,1"}};
  for (const auto& kind : kinds) {
    std::vector<std::string> cons = {"construct"};
    cons.insert(cons.end(), kind.begin(), kind.end());
    cons.insert(cons.end(), {"--format", "json"});
    const Result c = run(cons);
    ASSERT_EQ(c.code, 0);
    const auto path = temp_file(kind.front() + ".json");
    std::ofstream(path) << c.out;
    const Result from_file = run({"verify", "grid", "--input", path.string(), "--format", "json"});
    std::vector<std::string> direct = {"verify", "grid", "--kind"};
    direct.insert(direct.end(), kind.begin(), kind.end());
    direct.insert(direct.end(), {"--format", "json"});
    const Result from_flags = run(direct);
    EXPECT_EQ(from_file.code, 0);
    EXPECT_EQ(from_file.out, from_flags.out);
    std::filesystem::remove(path);
  }
}

TEST(Cli, TamperedInputFailsVerification) {
  const Result c = run({"construct", "rectangular", "--p", "2", "--q", "2", "--format", "json"});
  io::Json j = io::Json::parse(c.out);
  j["matrices"][1]["matrix"]["entries"][0][1]["re"]["num"] = "-1";
  const auto path = temp_file("tampered.json");
  std::ofstream(path) << j.dump();
  EXPECT_EQ(run({"verify", "grid", "--input", path.string()}).code, cli::kFail);
  std::ofstream(path) << "{not json";
  EXPECT_EQ(run({"verify", "grid", "--input", path.string()}).code, cli::kUsage);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"verify", "grid", "--input", "/nonexistent/file.json"}).code, cli::kUsage);
}

TEST(Cli, WitnessExamples) {
  const Result w32 = run({"witness", "--n", "3", "--k", "2"});
  EXPECT_EQ(w32.code, 0);
  EXPECT_NE(w32.out.find("row norm in H_3^2: 1.41421356"), std::string::npos) << w32.out;
  EXPECT_NE(w32.out.find("row norm in R_3: 1.73205081"), std::string::npos);
  const Result w42 = run({"witness", "--n", "4", "--k", "2", "--format", "json"});
  EXPECT_NEAR(io::Json::parse(w42.out)["row"]["ratio"].get<double>(), std::sqrt(2.0), 1e-9);
  const Result w22 = run({"witness", "--n", "2", "--k", "2"});
  EXPECT_NE(w22.out.find("ratio: 1.00000000, no separation"), std::string::npos) << w22.out;
  EXPECT_EQ(run({"witness", "--n", "7", "--k", "2"}).code, cli::kUsage);
}

TEST(CliBinary, ExitCodesAndStreams) {
  const auto ok = run_binary("construct hnk --n 3 --k 2");
  EXPECT_EQ(ok.first, 0);
  EXPECT_EQ(ok.second, run({"construct", "hnk", "--n", "3", "--k", "2"}).out);
  EXPECT_EQ(run_binary("construct hnk --n 3").first, 2);
  EXPECT_EQ(run_binary("construct hnk --n 9 --k 3").first, 3);
  EXPECT_TRUE(run_binary("construct hnk --n 3").second.empty());
}
