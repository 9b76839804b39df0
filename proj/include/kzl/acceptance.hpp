#pragma once
// The acceptance suite: one function per criterion, each timed against its
// limit. Details are deterministic; timings are kept separately.

#include <string>
#include <vector>

#include "json.hpp"

namespace kzl::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit = 0;
  std::string detail;
};

int criterion_count();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

nlohmann::json to_json(const CriterionResult& r, bool with_time = false);

// Recipes: {"name": ..., "experiments": [{"name", "kind", params..., "expect"}]}
// kinds: criterion, schur-koszul, u-evenodd, weyl-filtration, alcove-length
struct RecipeOutcome {
  nlohmann::json report;
  bool all_expected = true;
};
RecipeOutcome run_recipe(const nlohmann::json& recipe);

}  // namespace kzl::acceptance
