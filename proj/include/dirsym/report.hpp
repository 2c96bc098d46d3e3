#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dirsym/classify.hpp"

namespace dirsym {

using ojson = nlohmann::ordered_json;

/// "0.5·ZI", "XI - 2·YZ"; real/imaginary/complex coefficients as needed.
std::string render_pauli_sum(const ComplexMatrix& m);

ojson to_json(const SymmetrySolution& sol);
ojson to_json(const SymmetryReport& report);
ojson to_json(const TableReport& table);
ojson to_json(const PerturbationVerdict& verdict);
ojson to_json(const std::vector<PerturbationVerdict>& verdicts);
ojson spectrum_json(const HamiltonianModel& model, const std::vector<double>& p,
                    const std::vector<double>& eigenvalues);

std::string to_markdown(const HamiltonianModel& model, const SymmetrySolution& sol, double max_residual);
std::string to_markdown(const SymmetryReport& report);
std::string to_markdown(const TableReport& table);
std::string to_markdown(const HamiltonianModel& model, const std::vector<PerturbationVerdict>& verdicts);
std::string spectrum_markdown(const HamiltonianModel& model, const std::vector<double>& p,
                              const std::vector<double>& eigenvalues);

} // namespace dirsym
