#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirsym/symsolve.hpp"

namespace dirsym {

struct AuditOptions {
    unsigned seed = 42;
    double tol = kDefaultTol;
    int samples = 16;           // random momenta per residual check
    int rotation_samples = 100; // random (φ, p) for the finite-rotation check
};

struct SymmetryEntry {
    SymmetryKind kind;
    SymmetrySolution massive;
    SymmetrySolution massless;
    double max_residual = 0.0;  // worst re-verified defining-equation residual
};

struct RotationSummary {
    ComplexMatrix spin_z;
    ComplexMatrix full_turn;  // exp(2πi S_z)
    bool full_turn_is_minus_identity = false;
    double max_residual = 0.0;  // finite rotations at random (φ, p)
    int samples = 0;
};

struct SymmetryReport {
    std::string model;
    int d = 0;
    Eigen::Index n = 0;
    double mass = 0.0;
    std::vector<SymmetryEntry> entries;
    std::vector<LabelledOperator> operators;
    std::vector<RelationResult> relations;
    std::optional<RotationSummary> rotation;
    bool verified = true;  // every listed representative passed re-verification
};

/// Every symmetry at the massive and massless settings, the D_± labelling,
/// relation checks and (d ≥ 2) rotation checks. Deterministic for a seed.
SymmetryReport audit(const HamiltonianModel& model, const AuditOptions& opts = {});

// --- operator table for the two-flavour (2+1)D model ----------------------

struct TableEntry {
    std::string label;     // "D+(T)"
    std::string expected;  // "YY"
    std::string found;     // canonical rendering of the computed operator(s)
    bool matched = false;  // equal up to a unit-modulus scalar
    double residual = 0.0;
};

struct TableReport {
    std::vector<TableEntry> entries;

    int matched_count() const;
    bool ok() const { return matched_count() == static_cast<int>(entries.size()); }
};

/// Recomputes the 16 operator entries of the two-flavour summary table
/// (v_x, v_y, β, γ¹, γ², 2S_z and D_± of P_ν, T, C, M, χ) and compares them
/// with the reference strings.
TableReport reproduce_operator_table(const AuditOptions& opts = {});

// --- perturbations --------------------------------------------------------

struct PerturbationTerm {
    Monomial monomial;
    PauliString string;
    double coefficient = 1.0;  // V = coefficient · string · monomial

    std::string to_string() const;
};

struct VerdictEntry {
    SymmetryKind kind;
    std::string label;  // "", "+" or "-"
    bool massless = false;
    PauliString representative;
    bool preserves = false;

    /// "T+", "P_x", "M [m=0]".
    std::string name() const;
};

struct PerturbationVerdict {
    PerturbationTerm term;
    std::vector<VerdictEntry> entries;
    std::vector<std::string> surviving;
};

/// Perturbation strengths used to certify that a verdict does not depend on λ.
inline constexpr double kPerturbationStrengths[] = {0.37, 1.0};

/// Grades H + λ·V against the fixed representatives of the unperturbed
/// model (massive and massless settings).
class PerturbationClassifier {
public:
    explicit PerturbationClassifier(HamiltonianModel model, AuditOptions opts = {});

    PerturbationVerdict classify(const PerturbationTerm& term) const;
    const HamiltonianModel& model() const { return model_; }

private:
    HamiltonianModel model_;
    AuditOptions opts_;
    std::vector<std::vector<LabelledOperator>> settings_;
};

PerturbationVerdict classify_perturbation(const HamiltonianModel& model, const PerturbationTerm& term,
                                          const AuditOptions& opts = {});

/// All unit Pauli strings times all monomials of degree ≤ max_degree (0 or
/// 1), sorted by Pauli label then degree.
std::vector<PerturbationVerdict> enumerate_perturbations(const HamiltonianModel& model, int max_degree,
                                                         const AuditOptions& opts = {});

} // namespace dirsym
