// Copyright 2026 The contactscatter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "contact/serialization.hpp"
#include "contact_cli/cli.hpp"

namespace {

using namespace contact;
namespace cli = contact::cli;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  return cells;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

TEST(PhaseShifts, ResonantShellCsv) {
  const auto r = run({"phase-shifts", "--family", "shell3d", "--omega", "-1", "--alpha", "1", "--a",
                      "0.001", "--k", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto lines = split_lines(r.out);
  ASSERT_GE(lines.size(), 3u);
  EXPECT_EQ(lines[0], "index,tan_delta,delta_mod_pi");
  const auto row0 = split_csv(lines[1]);
  ASSERT_EQ(row0.size(), 3u);
  EXPECT_EQ(row0[0], "0");
  EXPECT_NEAR(std::stod(row0[1]), 1500.0, 1e-2);
}

TEST(PhaseShifts, CsvAndJsonCarryIdenticalValues) {
  const std::vector<std::string> base{"phase-shifts", "--family", "well3d", "--omega", "-2.5",
                                      "--a", "0.7", "--k", "1.3"};
  auto csv_args = base, json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto csv = run(csv_args);
  const auto json = run(json_args);
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(json.code, 0);
  const auto table = Json::parse(json.out).get<PhaseShiftTable>();
  const auto lines = split_lines(csv.out);
  ASSERT_EQ(lines.size(), table.entries.size() + 1);
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const auto cells = split_csv(lines[i + 1]);
    EXPECT_EQ(cells[1], format_double(table.entries[i].tan_delta));
    EXPECT_EQ(cells[2], format_double(table.entries[i].delta));
  }
  // Re-parses into the emitting record exactly.
  EXPECT_EQ(table, build_table({Family::kWell3D, -2.5, 1.0, 0.0, 0.7}, {1.3}));
  EXPECT_EQ(dump(Json(table)) + "\n", json.out);
}

TEST(PhaseShifts, SpecFile) {
  const auto path = write_temp("contact_cli_spec.json",
                               R"({"family":"ring2d","omega":-1,"alpha":1,"beta":1,"a":0.01,"a0":1})");
  const auto r = run({"phase-shifts", "--spec", path.string(), "--format", "json", "--lmax", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = Json::parse(r.out).get<PhaseShiftTable>();
  EXPECT_EQ(t.family, Family::kRing2D);
  EXPECT_LE(t.truncation_index, 3);
}

TEST(Resonances, Well3D) {
  const auto r = run({"resonances", "--family", "well3d", "--nmax", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_NEAR(j[0].get<double>(), -0.822467, 1e-6);
  EXPECT_NEAR(j[1].get<double>(), -7.402203, 1e-6);
  const auto csv = run({"resonances", "--family", "well1d-even", "--nmax", "3", "--format", "csv"});
  EXPECT_EQ(split_lines(csv.out).size(), 4u);
}

TEST(CrossSection, LimitGivesFourPi) {
  const auto r = run({"cross-section", "--family", "shell3d", "--omega", "-1", "--alpha", "1", "--k",
                      "1", "--limit", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_NEAR(number_from_json(j.at("sigma_total")), 4 * std::numbers::pi, 1e-9);
  EXPECT_EQ(j.at("verdict"), "ResonantContact");
  const auto csv = run({"cross-section", "--family", "shell3d", "--omega", "-1", "--alpha", "1", "--k",
                        "1", "--limit"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("# sigma_total=12.56637061435917", 0), 0u) << csv.out;
}

TEST(CrossSection, AngularGridAndOpticalTheorem) {
  const auto r = run({"cross-section", "--family", "ring2d", "--omega", "-0.6", "--beta", "1", "--a",
                      "0.2", "--a0", "1", "--k", "2", "--angles", "8", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("angles").size(), 8u);
  const double s = number_from_json(j.at("sigma_total"));
  EXPECT_NEAR(number_from_json(j.at("sigma_optical")) / s, 1.0, 1e-10);
  const auto one_d = run({"cross-section", "--family", "well1d", "--omega", "-1"});
  EXPECT_EQ(one_d.code, cli::kInvalidInput);
}

TEST(Scattering1D, Dictionary) {
  const auto r = run({"scattering-1d", "--family", "doubledelta1d", "--omega", "-1", "--alpha", "1",
                      "--limit", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "TotalTransmissionPhasePi");
  EXPECT_NEAR(number_from_json(j.at("re_t")), -1.0, 1e-12);
  EXPECT_NEAR(number_from_json(j.at("abs_r2")), 0.0, 1e-12);
  const auto csv = run({"scattering-1d", "--family", "well1d", "--omega", "-2", "--a", "0.5"});
  ASSERT_EQ(csv.code, 0);
  const auto cells = split_csv(split_lines(csv.out).at(1));
  EXPECT_NEAR(std::stod(cells[6]) + std::stod(cells[7]), 1.0, 1e-12);
}

TEST(LimitScan, ClassificationJson) {
  const auto r = run({"limit-scan", "--family", "shell3d", "--omega", "-1", "--alpha", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "ResonantContact");
  EXPECT_EQ(j.at("resonant_index"), 0);
  ASSERT_TRUE(j.at("evidence").is_array());
  EXPECT_TRUE(j.at("evidence").at(0).contains("xi"));
  EXPECT_TRUE(j.at("evidence").at(0).contains("tan_delta0"));
  EXPECT_EQ(j.get<LimitClassification>(), classify_limit({Family::kShell3D, -1.0, 1.0}, {1.0}));
}

TEST(LimitScan, KRangeSortedAndThreadIndependent) {
  const std::vector<std::string> base{"limit-scan", "--family", "shell3d", "--omega", "-1",
                                      "--k-range", "0.5:2:5"};
  auto one = base, many = base;
  one.insert(one.end(), {"--threads", "1"});
  many.insert(many.end(), {"--threads", "4"});
  const auto a = run(one), b = run(many);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  ASSERT_EQ(j.size(), 5u);
  for (std::size_t i = 1; i < j.size(); ++i) {
    EXPECT_LT(number_from_json(j[i - 1].at("k")), number_from_json(j[i].at("k")));
    EXPECT_EQ(j[i].at("verdict"), "ResonantContact");
  }
}

TEST(LimitScan, CustomSequenceAndCsv) {
  const auto r = run({"limit-scan", "--family", "shell3d", "--omega", "-0.5", "--xi-start", "0.1",
                      "--xi-end", "1e-6", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(split_lines(r.out).size(), 7u);  // header + 6 points
}

TEST(LimitScan, InconclusiveExitCode) {
  const auto r = run({"limit-scan", "--family", "doubledelta1d", "--omega", "1", "--alpha", "0.15"});
  EXPECT_EQ(r.code, cli::kInconclusive);
  EXPECT_EQ(Json::parse(r.out).at("verdict"), "inconclusive");
  EXPECT_EQ(Json::parse(r.err).at("error"), "inconclusive");
}

TEST(HalfBound, Report) {
  const auto r = run({"half-bound", "--family", "doubledelta1d", "--omega", "-1", "--a", "1"});
  ASSERT_EQ(r.code, 0);
  const auto rep = Json::parse(r.out).get<HalfBoundReport>();
  EXPECT_TRUE(rep.exists);
  EXPECT_EQ(rep.parity, Parity::kOdd);
}

TEST(Audit, DefaultGridPassesAndIsDeterministic) {
  const auto a = run({"audit", "--threads", "0"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  const auto b = run({"audit", "--threads", "1"});
  EXPECT_EQ(a.out, b.out);
  const auto report = Json::parse(a.out).get<AuditReport>();
  EXPECT_GE(report.rows.size(), 200u);
  EXPECT_EQ(report.failures, 0u);
}

TEST(Audit, DisagreementExitsNonzero) {
  // alpha = 0.15 gives an inconclusive numeric verdict, which counts as a failure.
  const auto path = write_temp("contact_cli_grid.json",
                               R"([{"family":"doubledelta1d","omega":1,"alpha":0.15,"a":0.3},
                                   {"family":"shell3d","omega":-1}])");
  const auto r = run({"audit", "--grid", path.string()});
  EXPECT_EQ(r.code, cli::kAuditFailure);
  EXPECT_EQ(Json::parse(r.err).at("error"), "audit_failure");
  const auto ok = write_temp("contact_cli_grid_ok.json", R"([{"family":"shell3d","omega":-1}])");
  EXPECT_EQ(run({"audit", "--grid", ok.string()}).code, cli::kOk);
}

TEST(Errors, InvalidInputIsOneLineJson) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"phase-shifts", "--family", "cube", "--omega", "1"},
        std::vector<std::string>{"phase-shifts", "--family", "well3d", "--omega", "1"},
        std::vector<std::string>{"phase-shifts", "--family", "shell3d", "--omega", "1", "--k", "-1"},
        std::vector<std::string>{"phase-shifts", "--family", "ring2d", "--omega", "1", "--a0", "0.5"},
        std::vector<std::string>{"phase-shifts"},
        std::vector<std::string>{"limit-scan", "--family", "shell3d", "--k-range", "1:0.5:3"},
        std::vector<std::string>{"limit-scan", "--family", "shell3d", "--xi-start", "1e-2", "--xi-end",
                                 "1e-3"},
        std::vector<std::string>{"resonances", "--family", "nope"},
        std::vector<std::string>{"frobnicate"},
        std::vector<std::string>{"phase-shifts", "--spec", "/nonexistent/spec.json"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, cli::kInvalidInput) << args[0] << " " << r.err;
    const auto lines = split_lines(r.err);
    ASSERT_EQ(lines.size(), 1u) << r.err;
    const auto j = Json::parse(lines[0]);
    EXPECT_TRUE(j.contains("error"));
    EXPECT_TRUE(j.contains("message"));
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Determinism, ByteIdenticalReruns) {
  const std::vector<std::string> args{"cross-section", "--family", "well3d", "--omega", "-3", "--a",
                                      "0.9", "--angles", "16"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
