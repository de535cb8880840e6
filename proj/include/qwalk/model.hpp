#pragma once

#include "qwalk/stepset.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qwalk {

enum class Model { Square, Diagonal, Kreweras, Knight };

// A named walk model: step set, start point, and (through its id) the
// functional equation its complete generating function satisfies; see
// functional_equation_residual in kernel.hpp.
struct ModelSpec {
    Model id;
    std::string name;
    StepSet steps;
    Point start;
};

const ModelSpec& builtin_model(Model m);
const std::vector<ModelSpec>& builtin_models();

std::optional<Model> parse_model_name(std::string_view name);
// Throws std::invalid_argument on an unknown name.
const ModelSpec& builtin_model(std::string_view name);

}  // namespace qwalk
