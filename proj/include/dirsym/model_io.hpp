#pragma once

#include <string>

#include <json.hpp>

#include "dirsym/hammodel.hpp"

namespace dirsym {

// Model document:
//   {"name": "...", "d": 2, "n": 2, "mass": 1.0, "flavour_factors": 0,
//    "terms": [{"exponents": [1, 0], "matrix": "X"},
//              {"exponents": [0, 0], "matrix": [[1,0],[0,0],[0,0],[-1,0]]}]}
// Matrices are Pauli-string expressions ("i * ZY") or row-major [re, im]
// pairs. The single degree-0 term, if present, is the mass matrix β.
HamiltonianModel model_from_json(const nlohmann::json& doc);
HamiltonianModel load_model_file(const std::string& path);

/// Zoo name, or a path to a model document.
HamiltonianModel resolve_model(const std::string& source);

ComplexMatrix matrix_from_json(const nlohmann::json& value, Eigen::Index n);

} // namespace dirsym
