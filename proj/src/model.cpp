#include "qwalk/model.hpp"

#include <stdexcept>

namespace qwalk {

const std::vector<ModelSpec>& builtin_models() {
    static const std::vector<ModelSpec> models = {
        ModelSpec{Model::Square, "square",
                  StepSet({{0, 1}, {1, 0}, {0, -1}, {-1, 0}}), Point{0, 0}},
        ModelSpec{Model::Diagonal, "diagonal",
                  StepSet({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), Point{0, 0}},
        ModelSpec{Model::Kreweras, "kreweras",
                  StepSet({{-1, 0}, {0, -1}, {1, 1}}), Point{0, 0}},
        ModelSpec{Model::Knight, "knight",
                  StepSet({{2, -1}, {-1, 2}}), Point{1, 1}},
    };
    return models;
}

const ModelSpec& builtin_model(Model m) {
    for (const auto& spec : builtin_models())
        if (spec.id == m) return spec;
    throw std::logic_error("builtin_model: unmapped model id");
}

std::optional<Model> parse_model_name(std::string_view name) {
    for (const auto& spec : builtin_models())
        if (spec.name == name) return spec.id;
    return std::nullopt;
}

const ModelSpec& builtin_model(std::string_view name) {
    const auto id = parse_model_name(name);
    if (!id)
        throw std::invalid_argument("unknown model '" + std::string(name) +
                                    "' (expected square, diagonal, kreweras or knight)");
    return builtin_model(*id);
}

}  // namespace qwalk
