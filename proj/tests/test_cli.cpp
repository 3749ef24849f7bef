// Copyright 2026 the sdh authors
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

#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sdh/command.hpp"
#include "sdh/io.hpp"
#include "sdh/recipe.hpp"

namespace {

sdh::CommandResult run(std::vector<std::string> args) {
  return sdh::run_command(args);
}

std::string data_path(const std::string& name) {
  return std::string(SDH_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("construct reports code shape") {
  const sdh::CommandResult r = run({"construct", "nv:5:1"});
  CHECK(r.exit_code == 0);
  CHECK(r.fields.at("n") == "12");
  CHECK(r.fields.at("k") == "6");
  CHECK(r.fields.at("self_dual") == "true");
  const nlohmann::json j = nlohmann::json::parse(r.json);
  CHECK(j.at("fields").at("n") == 12);
  CHECK(j.at("fields").at("self_dual") == true);
}

TEST_CASE("construct writes a loadable code file") {
  const std::string path = temp_path("sdh_test_nv5.code");
  const sdh::CommandResult r = run({"construct", "nv:5:1", "--out", path});
  REQUIRE(r.exit_code == 0);
  const sdh::NamedCode named = sdh::parse_code(sdh::read_file(path));
  CHECK(named.code.length() == 12);
  CHECK(named.code.dimension() == 6);

  // The written file round-trips through the code:PATH object.
  const sdh::CommandResult again = run({"verify", "code:" + path});
  CHECK(again.exit_code == 0);
  CHECK(again.fields.at("self_dual") == "true");
  std::filesystem::remove(path);
}

TEST_CASE("construct covers every code family") {
  CHECK(run({"construct", "qr:11"}).fields.at("n") == "12");
  CHECK(run({"construct", "pless:5"}).fields.at("n") == "12");
  CHECK(run({"construct", "neg4:2"}).fields.at("k") == "30");
}

TEST_CASE("malformed specs exit with a usage error") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"construct", "nv:6:1"},
        std::vector<std::string>{"construct", "nv:5"},
        std::vector<std::string>{"construct", "mystery:1"},
        std::vector<std::string>{"verify", "hnv:13:1"},
        std::vector<std::string>{"flarble", "nv:5:1"},
        std::vector<std::string>{"construct", "nv:5:1", "--frobnicate"}}) {
    const sdh::CommandResult r = run(args);
    CHECK(r.exit_code == 3);
    CHECK(r.fields.count("error") == 1);
    const nlohmann::json j = nlohmann::json::parse(r.json);
    CHECK(j.contains("error"));
  }
}

TEST_CASE("verify checks matrices and code membership") {
  const sdh::CommandResult r =
      run({"verify", "hnv:5:1", "--in-code", "nv:5:1", "--span-equals"});
  CHECK(r.exit_code == 0);
  CHECK(r.fields.at("hadamard") == "true");
  CHECK(r.fields.at("skew") == "true");
  CHECK(r.fields.at("rank3") == "6");
  CHECK(r.fields.at("in_code") == "true");
  CHECK(r.fields.at("span_equals_code") == "true");
  CHECK(r.fields.at("ok") == "true");
}

TEST_CASE("verify distinguishes the negated skew form") {
  const sdh::CommandResult r = run({"verify", "hnv:5:-1"});
  CHECK(r.exit_code == 0);
  CHECK(r.fields.at("skew") == "false");
  CHECK(r.fields.at("skew_negated") == "true");
}

TEST_CASE("span check without membership check is a usage error") {
  const sdh::CommandResult r = run({"verify", "hnv:5:1", "--span-equals"});
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify reports difference set parameters") {
  const sdh::CommandResult r = run({"verify", "hsds:5:eq+1"});
  CHECK(r.exit_code == 0);
  CHECK(r.fields.at("sds_valid") == "true");
  CHECK(r.fields.at("sds_v") == "5");
  CHECK(r.fields.at("sds_k") == "2");
  CHECK(r.fields.at("sds_lambda") == "1");
}

TEST_CASE("octal encode and decode round-trip through files") {
  const std::string path = temp_path("sdh_test_h12.oct");
  const sdh::CommandResult enc =
      run({"hadamard", "encode", "hnv:5:1", "--out", path});
  REQUIRE(enc.exit_code == 0);

  const sdh::CommandResult dec = run({"hadamard", "decode", path, "12"});
  CHECK(dec.exit_code == 0);
  CHECK(dec.fields.at("hadamard") == "true");
  CHECK(dec.fields.at("rank3") == "6");

  const sdh::CommandResult ver =
      run({"verify", "oct:" + path + ":12", "--in-code", "nv:5:1"});
  CHECK(ver.exit_code == 0);
  CHECK(ver.fields.at("in_code") == "true");
  std::filesystem::remove(path);
}

TEST_CASE("the bundled fixture decodes to the expected shape") {
  const sdh::CommandResult dec =
      run({"hadamard", "decode", data_path("bnv2.oct"), "60"});
  CHECK(dec.exit_code == 0);
  CHECK(dec.fields.at("hadamard") == "true");
  CHECK(dec.fields.at("rank3") == "30");
  CHECK(dec.fields.at("row0_zero_count") == "1");
  CHECK(dec.fields.at("row0_zero_position") == "31");
}

TEST_CASE("search commands expose counts and budgets") {
  const sdh::CommandResult fw = run({"search", "fullweight", "nv:5:1"});
  CHECK(fw.exit_code == 0);
  CHECK(fw.fields.at("count") == "24");
  CHECK(fw.fields.at("normalized") == "12");

  const sdh::CommandResult mw = run({"search", "minweight", "qr:11"});
  CHECK(mw.exit_code == 0);
  CHECK(mw.fields.at("weight") == "6");
  CHECK(mw.fields.at("exact") == "true");

  const sdh::CommandResult cl =
      run({"search", "clique", "nv:5:1", "--size", "12"});
  CHECK(cl.exit_code == 0);
  CHECK(cl.fields.at("vertices") == "12");
  CHECK(cl.fields.at("cliques") == "1");
  CHECK(cl.fields.at("exhaustive") == "true");

  const sdh::CommandResult missing = run({"search", "clique", "nv:5:1"});
  CHECK(missing.exit_code == 3);
}

TEST_CASE("equivalence commands agree with the library") {
  const sdh::CommandResult chk = run({"equiv", "check", "hnv:5:1", "paley1:11"});
  CHECK(chk.exit_code == 0);
  CHECK(chk.fields.at("equivalent") == "true");
  CHECK(chk.fields.at("witness_verified") == "true");
  const nlohmann::json j = nlohmann::json::parse(chk.json);
  CHECK(j.at("fields").at("witness").at("row_perm").size() == 12);

  const sdh::CommandResult ord = run({"equiv", "autorder", "hnv:5:1"});
  CHECK(ord.exit_code == 0);
  CHECK(ord.fields.at("order") == "190080");

  const sdh::CommandResult code = run({"equiv", "code", "nv:5:1", "qr:11"});
  CHECK(code.exit_code == 0);
  CHECK(code.fields.at("status") == "true");

  const sdh::CommandResult canon = run({"equiv", "canon", "hnv:5:1"});
  CHECK(canon.exit_code == 0);
  CHECK(canon.fields.at("order") == "12");
  CHECK(canon.fields.at("fingerprint") ==
        run({"equiv", "canon", "paley1:11"}).fields.at("fingerprint"));
}

TEST_CASE("describe explains every object kind") {
  for (const std::string spec :
       {"nv:5:1", "qr:11", "pless:17", "neg4:1", "hnv:29:1", "hsds:29:eq+1",
        "paley1:11", "paley2:17", "oct:x.oct:60", "sign:x.txt",
        "code:x.code"}) {
    CHECK_FALSE(sdh::describe(spec).empty());
    const sdh::CommandResult r = run({"describe", spec});
    CHECK(r.exit_code == 0);
    CHECK_FALSE(r.fields.at("description").empty());
  }
  CHECK(run({"describe", "widget:9"}).exit_code == 3);
}

TEST_CASE("recipes parse names, steps, tiers and expectations") {
  const std::string text =
      "# comment line\n"
      "name smoke\n"
      "step construct nv:5:1\n"
      "expect n 12\n"
      "expect self_dual true\n"
      "long step search fullweight nv:29:1\n"
      "expect count 41184\n";
  const sdh::ExperimentRecipe r = sdh::parse_recipe(text);
  CHECK(r.name == "smoke");
  REQUIRE(r.steps.size() == 2);
  CHECK_FALSE(r.steps[0].long_tier);
  CHECK(r.steps[0].args ==
        std::vector<std::string>{"construct", "nv:5:1"});
  REQUIRE(r.steps[0].expects.size() == 2);
  CHECK(r.steps[0].expects[1].first == "self_dual");
  CHECK(r.steps[1].long_tier);
}

TEST_CASE("recipe parse errors carry line context") {
  CHECK_THROWS(sdh::parse_recipe("step construct nv:5:1\n"));  // no name
  CHECK_THROWS(sdh::parse_recipe("name a\nname b\nstep x\n"));
  CHECK_THROWS(sdh::parse_recipe("name a\nexpect n 12\n"));
  CHECK_THROWS(sdh::parse_recipe("name a\n"));
  CHECK_THROWS(sdh::parse_recipe("name a\nwobble x\n"));
}

TEST_CASE("recipe runs report per-step and overall verdicts") {
  const std::string text =
      "name smoke\n"
      "step construct nv:5:1\n"
      "expect n 12\n"
      "long step search fullweight qr:47\n"
      "expect count 96\n";
  const sdh::ExperimentRecipe recipe = sdh::parse_recipe(text);

  const sdh::RecipeReport quick = sdh::run_recipe(recipe);
  CHECK(quick.passed);
  const nlohmann::json j = nlohmann::json::parse(quick.json);
  CHECK(j.at("passed") == true);
  REQUIRE(j.at("steps").size() == 2);
  CHECK(j.at("steps")[1].at("skipped") == true);

  sdh::RecipeOptions options;
  options.include_long = true;
  const sdh::RecipeReport full = sdh::run_recipe(recipe, options);
  CHECK(full.passed);
  const nlohmann::json jf = nlohmann::json::parse(full.json);
  CHECK(jf.at("steps")[1].at("skipped") == false);
  CHECK(jf.at("steps")[1].at("report").at("fields").at("count") == 96);
}

TEST_CASE("a wrong expectation fails the recipe") {
  const sdh::ExperimentRecipe recipe = sdh::parse_recipe(
      "name wrong\n"
      "step construct nv:5:1\n"
      "expect n 13\n");
  const sdh::RecipeReport report = sdh::run_recipe(recipe);
  CHECK_FALSE(report.passed);
  const nlohmann::json j = nlohmann::json::parse(report.json);
  CHECK(j.at("steps")[0].at("expects")[0].at("pass") == false);
  CHECK(j.at("steps")[0].at("expects")[0].at("got") == "12");
}

TEST_CASE("a failing step fails the recipe") {
  const sdh::ExperimentRecipe recipe = sdh::parse_recipe(
      "name broken\n"
      "step construct nv:6:1\n");
  const sdh::RecipeReport report = sdh::run_recipe(recipe);
  CHECK_FALSE(report.passed);
}

TEST_CASE("missing expectation fields are reported") {
  const sdh::ExperimentRecipe recipe = sdh::parse_recipe(
      "name missing\n"
      "step construct nv:5:1\n"
      "expect no_such_field 1\n");
  const sdh::RecipeReport report = sdh::run_recipe(recipe);
  CHECK_FALSE(report.passed);
  const nlohmann::json j = nlohmann::json::parse(report.json);
  CHECK(j.at("steps")[0].at("expects")[0].at("got") == "<missing>");
}

TEST_CASE("the bundled recipes parse and the quick ones pass") {
  const std::string dir = data_path("recipes");
  REQUIRE(std::filesystem::is_directory(dir));
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".recipe") continue;
    ++count;
    const sdh::ExperimentRecipe recipe =
        sdh::parse_recipe(sdh::read_file(entry.path().string()));
    CHECK_FALSE(recipe.name.empty());
    CHECK_FALSE(recipe.steps.empty());
  }
  CHECK(count >= 2);
}
