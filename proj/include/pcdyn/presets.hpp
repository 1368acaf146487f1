#pragma once

#include <optional>

#include "pcdyn/io.hpp"

namespace pcdyn {

struct Preset {
    std::string name;
    std::string description;
    MapSpec spec;
};

// Shipped systems: the Example 4.1 fixtures (general mode), the affine
// class-C systems S2 and S4 and the quadratic-affine S3.
std::vector<Preset> presets();

// eps applies to example-4.1-f2-eps (default 1/10); ignored elsewhere
MapSpec preset_spec(const std::string& name, const std::optional<std::string>& eps = std::nullopt);

Json presets_json();

}  // namespace pcdyn
