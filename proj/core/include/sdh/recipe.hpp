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

#ifndef SDH_RECIPE_HPP_
#define SDH_RECIPE_HPP_

#include <string>
#include <utility>
#include <vector>

namespace sdh {

// One command invocation inside a recipe, with the expected report fields.
struct RecipeStep {
  std::vector<std::string> args;
  bool long_tier = false;
  std::vector<std::pair<std::string, std::string>> expects;
};

// Plain-text experiment script.  Line forms:
//   name NAME          recipe name, once
//   # ...              comment
//   step ARG...        command line, whitespace separated
//   long step ARG...   command line only run when the long tier is enabled
//   expect KEY VALUE   expected field of the most recent step
struct ExperimentRecipe {
  std::string name;
  std::vector<RecipeStep> steps;
};

ExperimentRecipe parse_recipe(const std::string& text);

struct RecipeOptions {
  bool include_long = false;
  // When positive, appended as --threads to search steps that do not set
  // their own; other steps are unaffected.
  int threads = 0;
};

// Per-step pass/fail report.  A step passes when its command exits 0 and
// every expectation matches; the recipe passes when all executed steps
// pass.  Skipped long-tier steps are recorded but do not affect the
// verdict.  Apart from the elapsed_ms values the JSON report is
// deterministic for a fixed recipe and build.
struct RecipeReport {
  bool passed = false;
  std::string text;
  std::string json;
};

RecipeReport run_recipe(const ExperimentRecipe& recipe,
                        const RecipeOptions& options = {});

}  // namespace sdh

#endif  // SDH_RECIPE_HPP_
