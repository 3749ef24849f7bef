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
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdh/command.hpp"
#include "sdh/io.hpp"
#include "sdh/recipe.hpp"

namespace {

int run_recipe_command(const std::vector<std::string>& rest, bool as_json) {
  if (rest.size() < 2) {
    std::cerr << "usage: sdh recipe run PATH [--tier long] [--threads N]\n"
              << "       sdh recipe list [DIR]\n";
    return 3;
  }
  const std::string& mode = rest[1];
  if (mode == "list") {
    const std::string dir = rest.size() > 2 ? rest[2] : "data/recipes";
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".recipe") {
        paths.push_back(entry.path().string());
      }
    }
    std::sort(paths.begin(), paths.end());
    for (const std::string& path : paths) {
      try {
        const sdh::ExperimentRecipe recipe =
            sdh::parse_recipe(sdh::read_file(path));
        std::cout << path << "  " << recipe.name << "\n";
      } catch (const std::exception& err) {
        std::cout << path << "  (unreadable: " << err.what() << ")\n";
      }
    }
    return 0;
  }
  if (mode != "run") {
    std::cerr << "unknown recipe mode '" << mode << "'\n";
    return 3;
  }
  std::string path;
  sdh::RecipeOptions options;
  for (size_t i = 2; i < rest.size(); ++i) {
    if (rest[i] == "--tier") {
      if (i + 1 >= rest.size()) {
        std::cerr << "--tier needs a value\n";
        return 3;
      }
      const std::string tier = rest[++i];
      if (tier == "long") {
        options.include_long = true;
      } else if (tier != "default") {
        std::cerr << "unknown tier '" << tier << "'\n";
        return 3;
      }
    } else if (rest[i] == "--threads") {
      if (i + 1 >= rest.size()) {
        std::cerr << "--threads needs a value\n";
        return 3;
      }
      options.threads = std::stoi(rest[++i]);
    } else if (path.empty()) {
      path = rest[i];
    } else {
      std::cerr << "unexpected argument '" << rest[i] << "'\n";
      return 3;
    }
  }
  if (path.empty()) {
    std::cerr << "recipe run needs a file path\n";
    return 3;
  }
  const sdh::ExperimentRecipe recipe = sdh::parse_recipe(sdh::read_file(path));
  const sdh::RecipeReport report = sdh::run_recipe(recipe, options);
  std::cout << (as_json ? report.json + "\n" : report.text);
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "workbench for ternary self-dual codes and Hadamard matrices"};
  app.allow_extras();
  bool as_json = false;
  app.add_flag("--json", as_json, "print the JSON report instead of text");
  app.footer(
      "commands:\n"
      "  construct <code> [--out PATH]\n"
      "  verify <object> [--in-code SPEC [--span-equals]]\n"
      "  describe <object>\n"
      "  hadamard encode <matrix> --out PATH | decode PATH ORDER [--out PATH]\n"
      "  search fullweight|minweight|clique|p36-classes ...\n"
      "  equiv check|canon|autorder|code ...\n"
      "  recipe run PATH [--tier long] [--threads N] | recipe list [DIR]\n"
      "\n"
      "object specs: nv:P:A qr:P pless:Q neg4:I code:PATH hnv:P:A hsds:P:S\n"
      "              paley1:Q paley2:Q oct:PATH:N sign:PATH");

  CLI11_PARSE(app, argc, argv);
  const std::vector<std::string> rest = app.remaining();
  if (rest.empty()) {
    std::cout << app.help();
    return 0;
  }
  try {
    if (rest[0] == "recipe") {
      return run_recipe_command(rest, as_json);
    }
    const sdh::CommandResult result = sdh::run_command(rest);
    std::cout << (as_json ? result.json + "\n" : result.text);
    return result.exit_code;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
}
