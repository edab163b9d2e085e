#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lcskt {

// One reproduction: a pinned closed-form value or verdict recomputed from
// scratch by the engine and compared exactly (or within the stated float
// tolerance for the lattice screens).
struct ScenarioResult {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool match = false;
};

struct Scenario {
    std::string id;
    std::string description;
    std::function<ScenarioResult()> run;
};

const std::vector<Scenario>& scenario_registry();
std::vector<std::string> scenario_ids();
ScenarioResult run_scenario(const std::string& id);  // throws UnknownScenario
std::vector<ScenarioResult> run_all_scenarios();

}  // namespace lcskt
