#pragma once

#include "bidisk/solver.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace bidisk {

/// Malformed problem description (bad shape, missing field, invalid data).
class ProblemFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BoundaryFunction boundary_from_json(const nlohmann::json& j);
SourceFunction source_from_json(const nlohmann::json& j);
QuadratureConfig quadrature_from_json(const nlohmann::json& j);

/// "g" and "quad" are optional (zero source, default rule).
BiharmonicProblem problem_from_json(const nlohmann::json& j);
BiharmonicProblem load_problem(const std::string& path);

nlohmann::json to_json(const BoundaryFunction& b);
nlohmann::json to_json(const SourceFunction& g);
nlohmann::json to_json(const QuadratureConfig& q);
nlohmann::json to_json(const BiharmonicProblem& p);

} // namespace bidisk
