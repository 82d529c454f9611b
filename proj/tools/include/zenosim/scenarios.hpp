#pragma once

#include <string>
#include <vector>

#include "zenosim/config.hpp"
#include "zenosim/output.hpp"

namespace zenosim {

// Runs one resolved scenario. Library errors (zeno::Error) propagate
// unchanged; parameter problems surface as ValidationError.
RunOutput run_scenario(const Scenario& s);

struct FigureInfo {
    std::string id;
    std::string description;
};

const std::vector<FigureInfo>& figures();

// Throws ValidationError for an unknown id.
RunOutput run_figure(const std::string& id);

}  // namespace zenosim
