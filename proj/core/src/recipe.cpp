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

#include "sdh/recipe.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdh/command.hpp"

namespace sdh {
namespace {

using nlohmann::json;

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

std::string join(const std::vector<std::string>& tokens, size_t from) {
  std::string out;
  for (size_t i = from; i < tokens.size(); ++i) {
    if (i > from) {
      out += " ";
    }
    out += tokens[i];
  }
  return out;
}

std::string line_error(int lineno, const std::string& message) {
  return "recipe line " + std::to_string(lineno) + ": " + message;
}

}  // namespace

ExperimentRecipe parse_recipe(const std::string& text) {
  ExperimentRecipe recipe;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') {
      continue;
    }
    if (tokens[0] == "name") {
      if (tokens.size() < 2) {
        throw std::invalid_argument(line_error(lineno, "name needs a value"));
      }
      if (!recipe.name.empty()) {
        throw std::invalid_argument(line_error(lineno, "duplicate name line"));
      }
      recipe.name = join(tokens, 1);
      continue;
    }
    const bool long_tier = tokens[0] == "long";
    if (tokens[0] == "step" || (long_tier && tokens.size() > 1 && tokens[1] == "step")) {
      const size_t from = long_tier ? 2 : 1;
      if (tokens.size() <= from) {
        throw std::invalid_argument(line_error(lineno, "step needs a command"));
      }
      RecipeStep step;
      step.args.assign(tokens.begin() + from, tokens.end());
      step.long_tier = long_tier;
      recipe.steps.push_back(std::move(step));
      continue;
    }
    if (tokens[0] == "expect") {
      if (tokens.size() < 3) {
        throw std::invalid_argument(
            line_error(lineno, "expect needs a key and a value"));
      }
      if (recipe.steps.empty()) {
        throw std::invalid_argument(
            line_error(lineno, "expect must follow a step"));
      }
      recipe.steps.back().expects.emplace_back(tokens[1], join(tokens, 2));
      continue;
    }
    throw std::invalid_argument(
        line_error(lineno, "unknown directive '" + tokens[0] + "'"));
  }
  if (recipe.name.empty()) {
    throw std::invalid_argument("recipe has no name line");
  }
  if (recipe.steps.empty()) {
    throw std::invalid_argument("recipe has no steps");
  }
  return recipe;
}

RecipeReport run_recipe(const ExperimentRecipe& recipe,
                        const RecipeOptions& options) {
  json steps_json = json::array();
  std::ostringstream text;
  bool all_pass = true;
  text << "recipe " << recipe.name << "\n";
  for (const RecipeStep& step : recipe.steps) {
    json step_json;
    step_json["args"] = step.args;
    step_json["long_tier"] = step.long_tier;
    if (step.long_tier && !options.include_long) {
      step_json["skipped"] = true;
      steps_json.push_back(step_json);
      text << "[skip] " << join(step.args, 0) << "\n";
      continue;
    }
    step_json["skipped"] = false;

    std::vector<std::string> args = step.args;
    if (options.threads > 0 && !args.empty() && args[0] == "search" &&
        std::find(args.begin(), args.end(), "--threads") == args.end()) {
      args.push_back("--threads");
      args.push_back(std::to_string(options.threads));
    }

    const auto start = std::chrono::steady_clock::now();
    const CommandResult result = run_command(args);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    step_json["exit_code"] = result.exit_code;
    step_json["elapsed_ms"] = elapsed;
    step_json["report"] = json::parse(result.json);

    bool step_pass = result.exit_code == 0;
    json expects_json = json::array();
    std::vector<std::string> failures;
    for (const auto& [key, want] : step.expects) {
      const auto it = result.fields.find(key);
      const std::string got = it == result.fields.end() ? "<missing>" : it->second;
      const bool match = got == want;
      step_pass = step_pass && match;
      json e;
      e["key"] = key;
      e["want"] = want;
      e["got"] = got;
      e["pass"] = match;
      expects_json.push_back(e);
      if (!match) {
        failures.push_back("expect " + key + ": want " + want + ", got " + got);
      }
    }
    step_json["expects"] = expects_json;
    step_json["pass"] = step_pass;
    steps_json.push_back(step_json);
    all_pass = all_pass && step_pass;

    text << (step_pass ? "[ ok ] " : "[FAIL] ") << join(step.args, 0) << " ("
         << elapsed << " ms)\n";
    if (result.exit_code != 0) {
      const auto it = result.fields.find("error");
      text << "       exit " << result.exit_code
           << (it != result.fields.end() ? ": " + it->second : "") << "\n";
    }
    for (const std::string& f : failures) {
      text << "       " << f << "\n";
    }
  }
  text << (all_pass ? "PASS" : "FAIL") << " " << recipe.name << "\n";

  RecipeReport report;
  report.passed = all_pass;
  json root;
  root["name"] = recipe.name;
  root["passed"] = all_pass;
  root["steps"] = steps_json;
  report.json = root.dump(2);
  report.text = text.str();
  return report;
}

}  // namespace sdh
