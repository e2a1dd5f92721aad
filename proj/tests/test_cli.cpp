// Copyright 2026 The ginidex Authors.
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

// End-to-end tests of the ginidex binary: flag handling, exit codes, JSON
// and CSV output contracts, and byte determinism of the simulator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ginidex/ginidex.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout only
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string("\"") + GINIDEX_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int rc = pclose(pipe);
  return CliResult{WEXITSTATUS(rc), output};
}

// Scratch CSV in the working directory; removed on destruction.
struct TempCsv {
  std::string path;
  explicit TempCsv(const std::string& name, const std::string& content)
      : path("cli_test_" + name + ".csv") {
    std::ofstream out(path);
    out << content;
  }
  ~TempCsv() { std::remove(path.c_str()); }
};

const std::string kFixtureCsv =
    std::string(GINIDEX_SOURCE_DIR) + "/data/gdp2023.csv";

}  // namespace

TEST_CASE("index: exponential lower closed form") {
  const CliResult r =
      run_cli("index --dist gamma --alpha 1 --lambda 1 --m 3 --kind lower");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["schema_version"] == 1);
  CHECK(std::fabs(report["value"].get<double>() - 2.0 / 9.0) < 1e-6);
  CHECK(report["representation"] == "survival");
  CHECK(report["est_error"].get<double>() >= 0.0);
}

TEST_CASE("index: rate invariance and representation agreement") {
  const CliResult r = run_cli(
      "index --dist gamma --alpha 2 --lambda 7 --m 2 --kind combined --repr all");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  REQUIRE(report["results"].size() == 4);
  for (const json& entry : report["results"]) {
    CHECK(std::fabs(entry["value"].get<double>() - 0.375) < 1e-6);
  }
  CHECK(report["max_pairwise_gap"].get<double>() < 1e-6);
}

TEST_CASE("index: fitted from data") {
  const CliResult r = run_cli("index --fixture gdp2023 --m 3 --kind lower");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["model"]["source"] == "mle_fit");
  CHECK(std::fabs(report["model"]["alpha"].get<double>() - 5.4706267839) <
        1e-5);
}

TEST_CASE("index: usage errors exit 2") {
  CHECK(run_cli("index --dist gamma --alpha 1 --lambda 1 --kind lower")
            .exit_code == 2);  // missing --m
  CHECK(run_cli("index --dist gamma --alpha 1 --lambda 1 --m 3 --kind lower "
                "--repr nope")
            .exit_code == 2);
  CHECK(run_cli("index --m 3 --kind lower").exit_code == 2);  // no model
  CHECK(run_cli("index --dist weibull --alpha 1 --lambda 1 --m 3 --kind lower")
            .exit_code == 2);
}

TEST_CASE("index: numeric domain exits 3") {
  CHECK(run_cli("index --dist gamma --alpha -2 --lambda 1 --m 3 --kind lower")
            .exit_code == 3);
}

TEST_CASE("estimate: three-row file") {
  const TempCsv file("rows123", "1\n2\n3\n");
  const CliResult r =
      run_cli("estimate --data " + file.path + " --m 2 --i 2 --kind lower");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(std::fabs(report["value"].get<double>() - 1.0 / 3.0) < 1e-6);
  CHECK(report["n"] == 3);
  CHECK(report["m"] == 2);
  CHECK(report["i"] == 2);
  CHECK(report["algorithm"] == "weighted");
}

TEST_CASE("estimate: CLI output equals the library value bit-for-bit") {
  const CliResult r = run_cli("estimate --data " + kFixtureCsv +
                              " --column gdp --m 2 --i 1 --kind combined");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);

  gx_sample* sample = nullptr;
  REQUIRE(gx_sample_from_csv(kFixtureCsv.c_str(), "gdp", &sample) == GX_OK);
  double value = 0.0;
  REQUIRE(gx_estimate(sample, 2, 1, GX_KIND_COMBINED, GX_ALG_WEIGHTED,
                      &value) == GX_OK);
  gx_sample_free(sample);

  char expected[64];
  std::snprintf(expected, sizeof expected, "%.10g", value);
  char actual[64];
  std::snprintf(actual, sizeof actual, "%.10g", report["value"].get<double>());
  CHECK(std::string(actual) == expected);
}

TEST_CASE("estimate: brute force agrees with weighted on the fixture") {
  const CliResult weighted =
      run_cli("estimate --fixture gdp2023 --m 2 --i 1 --kind combined");
  const CliResult brute = run_cli(
      "estimate --fixture gdp2023 --m 2 --i 1 --kind combined --algorithm brute");
  REQUIRE(weighted.exit_code == 0);
  REQUIRE(brute.exit_code == 0);
  const double w = json::parse(weighted.output)["value"].get<double>();
  const double b = json::parse(brute.output)["value"].get<double>();
  CHECK(std::fabs(w - b) < 1e-10);
  // Frozen enumeration golden for the Table-of-countries fixture.
  CHECK(std::fabs(b - 0.2642393209) < 1e-9);
}

TEST_CASE("estimate: exit codes") {
  const TempCsv small("small", "1\n2\n");
  CHECK(run_cli("estimate --data " + small.path + " --m 4 --i 1 --kind lower")
            .exit_code == 4);
  const TempCsv words("words", "1\nabc\n3\n");
  CHECK(run_cli("estimate --data " + words.path + " --m 2 --i 1 --kind lower")
            .exit_code == 3);
  CHECK(run_cli("estimate --data /no/such/file.csv --m 2 --i 1 --kind lower")
            .exit_code == 3);
  const TempCsv flat("flat", "5\n5\n5\n");
  const CliResult r =
      run_cli("estimate --data " + flat.path + " --m 2 --i 1 --kind lower");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.output)["value"].get<double>() == 0.0);
}

TEST_CASE("fit: fixture golden values and scale equivariance") {
  const CliResult r = run_cli("fit --fixture gdp2023");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["converged"] == true);
  CHECK(std::fabs(report["alpha"].get<double>() - 5.4706267839) < 1e-6);
  CHECK(std::fabs(report["lambda"].get<double>() - 2.4162567875e-4) < 1e-10);

  // Doubling the data halves the rate and keeps the shape.
  std::string doubled = "gdp\n";
  gx_sample* sample = nullptr;
  REQUIRE(gx_sample_builtin("gdp2023", &sample) == GX_OK);
  std::vector<double> values(gx_sample_size(sample));
  REQUIRE(gx_sample_values(sample, values.data(), values.size()) == GX_OK);
  gx_sample_free(sample);
  for (double v : values) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f\n", 2.0 * v);
    doubled += buf;
  }
  const TempCsv file("doubled", doubled);
  const CliResult r2 = run_cli("fit --data " + file.path + " --column gdp");
  REQUIRE(r2.exit_code == 0);
  const json report2 = json::parse(r2.output);
  CHECK(std::fabs(report2["alpha"].get<double>() -
                  report["alpha"].get<double>()) < 1e-6);
  CHECK(std::fabs(report2["lambda"].get<double>() -
                  report["lambda"].get<double>() / 2.0) < 1e-10);
}

TEST_CASE("fit: degenerate inputs exit 5") {
  const TempCsv one("one", "42\n");
  CHECK(run_cli("fit --data " + one.path).exit_code == 5);
  const TempCsv flat("flat5", "5\n5\n5\n");
  CHECK(run_cli("fit --data " + flat.path).exit_code == 5);
}

TEST_CASE("simulate: smoke CSV shape") {
  const CliResult r = run_cli(
      "simulate --alpha 2 --lambda 1 --m 3 --i 3 --sizes 3,5 --reps 2 --seed 7");
  REQUIRE(r.exit_code == 0);
  std::vector<std::string> lines;
  std::string line;
  std::istringstream stream(r.output);
  while (std::getline(stream, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "n,kind,bias,mse,mc_se,truth");
  CHECK(lines[1].rfind("3,lower,", 0) == 0);
  CHECK(lines[2].rfind("3,upper,", 0) == 0);
  CHECK(lines[3].rfind("5,lower,", 0) == 0);
}

TEST_CASE("simulate: byte-identical for equal seeds regardless of threads") {
  const std::string base =
      "simulate --alpha 2 --lambda 1 --m 3 --i 3 --sizes 10,20 --reps 60";
  const CliResult a = run_cli(base + " --seed 5 --threads 1");
  const CliResult b = run_cli(base + " --seed 5 --threads 4");
  const CliResult c = run_cli(base + " --seed 5 --threads 1");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
  const CliResult d = run_cli(base + " --seed 6 --threads 1");
  CHECK(a.output != d.output);
}

TEST_CASE("simulate: GINIDEX_SEED provides the default seed") {
  const std::string base =
      "simulate --alpha 2 --lambda 1 --m 3 --i 1 --sizes 8 --reps 20";
  const CliResult via_env = run_cli(base, "GINIDEX_SEED=123");
  const CliResult via_flag = run_cli(base + " --seed 123");
  REQUIRE(via_env.exit_code == 0);
  CHECK(via_env.output == via_flag.output);
  CHECK(run_cli(base, "GINIDEX_SEED=notanumber").exit_code == 2);
}

TEST_CASE("gof: fixture p-values and error paths") {
  const CliResult r = run_cli("gof --fixture gdp2023");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["method"] == "plugin_exact");
  CHECK(std::fabs(report["p_value_ks"].get<double>() - 0.508) < 0.05);
  CHECK(std::fabs(report["p_value_cvm"].get<double>() - 0.784) < 0.07);
  CHECK(report["fitted"]["converged"] == true);

  const TempCsv flat("flatgof", "5\n5\n5\n5\n");
  CHECK(run_cli("gof --data " + flat.path).exit_code == 5);
  CHECK(run_cli("gof --fixture gdp2023 --method nope").exit_code == 2);
}

TEST_CASE("gof: bootstrap method is seeded and reproducible") {
  const CliResult a =
      run_cli("gof --fixture gdp2023 --method bootstrap --boot 500 --seed 9");
  const CliResult b =
      run_cli("gof --fixture gdp2023 --method bootstrap --boot 500 --seed 9");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json report = json::parse(a.output);
  CHECK(report["method"] == "parametric_bootstrap");
  CHECK(report["p_value_ks"].get<double>() > 0.0);
}

TEST_CASE("heatmap: grid CSV and decomposition across kinds") {
  const CliResult lower =
      run_cli("heatmap --fixture gdp2023 --kind lower --m-max 4");
  const CliResult upper =
      run_cli("heatmap --fixture gdp2023 --kind upper --m-max 4");
  REQUIRE(lower.exit_code == 0);
  REQUIRE(upper.exit_code == 0);

  const auto parse_rows = [](const std::string& text) {
    std::vector<std::array<double, 3>> rows;
    std::istringstream stream(text);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "m,i,value");
    while (std::getline(stream, line)) {
      std::array<double, 3> row{};
      REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &row[0], &row[1],
                          &row[2]) == 3);
      rows.push_back(row);
    }
    return rows;
  };
  const auto lo = parse_rows(lower.output);
  const auto hi = parse_rows(upper.output);
  REQUIRE(lo.size() == 9);  // m = 2,3,4 -> 2+3+4 cells
  REQUIRE(hi.size() == 9);
  // Per-m sums of lower+upper are constant across i (6-digit CSV).
  for (std::size_t a = 0; a < lo.size(); ++a) {
    for (std::size_t b = 0; b < lo.size(); ++b) {
      if (lo[a][0] == lo[b][0]) {
        CHECK(std::fabs((lo[a][2] + hi[a][2]) - (lo[b][2] + hi[b][2])) < 1e-5);
      }
    }
  }

  CHECK(run_cli("heatmap --fixture gdp2023 --kind lower --m-max 12")
            .exit_code == 4);
  CHECK(run_cli("heatmap --fixture gdp2023 --kind combined --m-max 3")
            .exit_code == 2);
  const CliResult m2 = run_cli("heatmap --fixture gdp2023 --kind lower --m-max 2");
  REQUIRE(m2.exit_code == 0);
  CHECK(parse_rows(m2.output).size() == 2);
}

TEST_CASE("version flag") {
  const CliResult r = run_cli("--version");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("ginidex 0.1.0") != std::string::npos);
}
