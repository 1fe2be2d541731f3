// Copyright 2026 The fglog Authors.
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

#include <sstream>
#include <string>
#include <vector>

#include "build.hpp"
#include "fglog/formal_group.hpp"
#include "fglog/io.hpp"
#include "fglog_cli/cli.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = fglog::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(FGLOG_DATA_DIR) + "/" + name; }

bool contains(const std::string &hay, const std::string &needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(Cli, VerifyMultiplicative) {
  const Result r = run({"verify", "--group", data("fg_mult.json"), "--order", "8"});
  EXPECT_EQ(r.code, fglog::cli::kExitPass) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "result: pass")) << r.out;
  EXPECT_TRUE(contains(r.out, "order N = 8")) << r.out;
}

TEST(Cli, LogPretty) {
  const Result r =
      run({"log", "--group", data("fg_mult.json"), "--order", "6", "--format", "pretty"});
  EXPECT_EQ(r.code, fglog::cli::kExitPass);
  EXPECT_TRUE(contains(r.out, "x - 1/2·x^2 + 1/3·x^3 - 1/4·x^4 + 1/5·x^5 - 1/6·x^6\n")) << r.out;
}

TEST(Cli, CheckCocycleViolation) {
  const Result r = run({"check-cocycle", "--hopf", data("qt.json"), "--cocycle", "t (x) t^2"});
  EXPECT_EQ(r.code, fglog::cli::kExitViolation);
  EXPECT_TRUE(contains(r.out, "2(t⊗t⊗t)")) << r.out;
  const Result ok = run({"check-cocycle", "--hopf", data("qt.json"), "--cocycle", "2 t (x) t"});
  EXPECT_EQ(ok.code, fglog::cli::kExitPass) << ok.out;
}

TEST(Cli, Roundtrip) {
  const Result a = run({"roundtrip", "--group", data("fg_cocycle.json")});
  EXPECT_EQ(a.code, fglog::cli::kExitPass) << a.out << a.err;
  EXPECT_TRUE(contains(a.out, "cocycle: pass  2(t⊗t)")) << a.out;
  EXPECT_TRUE(contains(a.out, "compare: pass")) << a.out;

  const Result b = run({"roundtrip", "--group", data("fg_mult.json")});
  EXPECT_EQ(b.code, fglog::cli::kExitPass) << b.out << b.err;
  EXPECT_TRUE(contains(b.out, "cocycle: pass  0")) << b.out;

  const Result c = run({"roundtrip", "--group", data("fg_corrupt.json")});
  EXPECT_EQ(c.code, fglog::cli::kExitViolation) << c.out;
  EXPECT_TRUE(contains(c.out, "axioms: fail")) << c.out;
  EXPECT_TRUE(contains(c.out, "associativity")) << c.out;
  EXPECT_FALSE(contains(c.out, "logarithm:")) << c.out;
}

TEST(Cli, OtherCommands) {
  const Result inv = run({"inverse", "--group", data("fg_cocycle.json")});
  EXPECT_EQ(inv.code, 0);
  EXPECT_TRUE(contains(inv.out, "2t^2 - x\n")) << inv.out;

  const Result cb = run({"coboundary", "--hopf", "qt1", "--element", "t^3"});
  EXPECT_EQ(cb.code, 0);
  EXPECT_TRUE(contains(cb.out, "3(t⊗t^2) + 3(t^2⊗t)")) << cb.out;

  const Result hopf = run({"check-hopf", "--hopf", "qtu", "--hdeg", "8"});
  EXPECT_EQ(hopf.code, 0) << hopf.out;

  const Result sp = run({"specialize", "--group", data("fg_cocycle.json")});
  EXPECT_EQ(sp.code, 0) << sp.out;
  EXPECT_TRUE(contains(sp.out, "law: x + y\n")) << sp.out;
  EXPECT_TRUE(contains(sp.out, "logarithm: x\n")) << sp.out;

  const Result rec = run({"reconstruct", "--hopf", data("qt.json"), "--log", data("log_qt.json"),
                          "--cocycle", "0", "--order", "2"});
  EXPECT_EQ(rec.code, 0) << rec.out << rec.err;

  const Result co = run({"cocycle", "--group", data("fg_cocycle.json")});
  EXPECT_EQ(co.code, 0);
  EXPECT_TRUE(contains(co.out, "2(t⊗t)")) << co.out;
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"verify", "--group", data("missing.json")}).code, fglog::cli::kExitInput);
  EXPECT_EQ(run({"verify", "--group", "-"}, "{not json").code, fglog::cli::kExitInput);
  EXPECT_EQ(run({"check-cocycle", "--hopf", "qt2", "--cocycle", "t (x"}).code,
            fglog::cli::kExitInput);
  EXPECT_EQ(run({"check-hopf", "--hopf", "nonesuch"}).code, fglog::cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, fglog::cli::kExitInput);
  EXPECT_EQ(run({"verify", "--group", data("fg_mult.json"), "--order", "0"}).code,
            fglog::cli::kExitInput);
  EXPECT_EQ(run({"coboundary", "--hopf", "qt1", "--element", "1 + t"}).code,
            fglog::cli::kExitInput);
}

TEST(Cli, TruncationInsufficient) {
  // c + X + Y with an unknown tail at N = 2: the extracted constant cannot be
  // certified up to degree 2D.
  const std::string doc = R"({"hopf": "qt2", "order": 2, "series": {
      "variables": ["X", "Y"], "order": 2, "arity": 2,
      "terms": [{"exp": [0, 0], "coeff": "2 t (x) t"},
                {"exp": [1, 0], "coeff": "1 (x) 1"},
                {"exp": [0, 1], "coeff": "1 (x) 1"}]}})";
  const Result r = run({"cocycle", "--group", "-", "--hdeg", "8"}, doc);
  EXPECT_EQ(r.code, fglog::cli::kExitTruncation) << r.out << r.err;
}

TEST(Cli, StrictGrading) {
  const Result plain = run({"verify", "--group", data("fg_cocycle.json"), "--strict-grading"});
  EXPECT_EQ(plain.code, fglog::cli::kExitViolation) << plain.out;
  EXPECT_TRUE(contains(plain.out, "grading")) << plain.out;
  // deg(2t⊗t) = 4 matches deg x = 4; the linear terms have degree 0.
  const Result w = run({"verify", "--group", data("fg_cocycle.json"), "--strict-grading",
                        "--x-degree", "4"});
  EXPECT_EQ(w.code, fglog::cli::kExitPass) << w.out;
  const Result rt = run({"roundtrip", "--group", data("fg_cocycle.json"), "--strict-grading"});
  EXPECT_EQ(rt.code, fglog::cli::kExitViolation) << rt.out;
  EXPECT_TRUE(contains(rt.out, "axioms: fail  grading")) << rt.out;
  const Result rtw = run({"roundtrip", "--group", data("fg_cocycle.json"), "--strict-grading",
                          "--x-degree", "4"});
  EXPECT_EQ(rtw.code, fglog::cli::kExitPass) << rtw.out;
  // Commands that would ignore the flag do not accept it.
  EXPECT_EQ(run({"log", "--group", data("fg_mult.json"), "--strict-grading"}).code,
            fglog::cli::kExitInput);
}

TEST(Cli, JsonOutputRoundTrips) {
  const Result r = run({"log", "--group", data("fg_mult.json"), "--order", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["command"], "log");
  EXPECT_EQ(doc["order"], 6);

  const fglog::AlgebraPtr q = build::trivial(8);
  std::string series_text;
  for (const auto &[key, value] : doc.items()) {
    if (value.is_object() && value.contains("terms")) series_text = value.dump();
  }
  ASSERT_FALSE(series_text.empty()) << r.out;
  const fglog::Series g = fglog::series_from_json(q, series_text);
  const fglog::Series f = build::poly(q, 2, 2, 6, {{{1, 0}, "1⊗1"}, {{0, 1}, "1⊗1"}, {{1, 1}, "1⊗1"}});
  EXPECT_EQ(g, fglog::logarithm(fglog::FormalGroupLaw(f)).series());

  const Result v = run({"verify", "--group", data("fg_corrupt.json"), "--format", "json"});
  EXPECT_EQ(v.code, 1);
  const json rep = json::parse(v.out);
  EXPECT_TRUE(rep.dump().find("associativity") != std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"roundtrip", "--group", data("fg_cocycle.json"),
                                         "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
