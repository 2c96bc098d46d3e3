#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirsym/hammodel.hpp"
#include "dirsym/pauli.hpp"

namespace dirsym {

enum class SymmetryKind {
    ParityX,          // (x, y) → (x, −y)
    ParityY,          // (x, y) → (−x, y)
    Parity,           // p → −p, d = 1 or 3
    TimeReversal,
    ParticleHole,
    EnergyReflection,
    Chirality,
};

/// Short symbol used in reports and on the command line: P_x, P_y, P, T, C, M, chi.
std::string symbol(SymmetryKind kind);
SymmetryKind kind_from_symbol(const std::string& text);
bool is_antiunitary(SymmetryKind kind);

/// Symmetries that apply to a d-dimensional model, in report order.
std::vector<SymmetryKind> symmetry_kinds(int d);

/// Defining equation D·H^σ(p)·D⁻¹ = ε·H(S p), σ = complex conjugation iff
/// `conjugate`. Chirality instead uses the generator condition
/// [D, v_j] = 0, {D, β} = 0 and ignores `massless`.
struct SymmetryQuery {
    SymmetryKind kind;
    bool conjugate;
    RealMatrix momentum_map;
    int energy_sign;
    bool massless;

    static SymmetryQuery make(SymmetryKind kind, int d, bool massless = false);
    std::string to_string() const;
};

/// One linear block D·lhs − rhs·D = 0 of the vectorised system.
struct ConstraintBlock {
    Monomial monomial;
    ComplexMatrix lhs;
    ComplexMatrix rhs;
};

struct ConstraintSystem {
    Eigen::Index n = 0;
    std::vector<ConstraintBlock> blocks;

    /// Rows acting on column-major vec(D): (lhsᵀ ⊗ I − I ⊗ rhs) per block.
    ComplexMatrix stacked() const;
};

ConstraintSystem build_constraints(const HamiltonianModel& model, const SymmetryQuery& q);

enum class SquareSign { Plus, Minus, NonScalar };
std::string to_string(SquareSign s);

/// D·D (unitary) or D·D̄ (antiunitary) compared with ±I. Throws on a
/// non-unitary input.
SquareSign classify_square(const ComplexMatrix& d, bool conjugate, double tol = kDefaultTol);

struct Representative {
    PauliString string;  // in canonical phase
    SquareSign square;

    ComplexMatrix matrix() const { return string.matrix(); }
};

struct SymmetrySolution {
    SymmetryQuery query;
    int nullity = 0;
    std::vector<Representative> representatives;

    bool exists() const { return !representatives.empty(); }
};

/// Canonical phase for a Pauli-string representative.
///
/// Antiunitary kinds: the phase that makes the matrix real. Unitary kinds:
/// the phase that makes the flavour factors real, which is phase 1
/// (Hermitian) for single-flavour models. Phases are taken from {1, i}.
PauliString canonical_phase(const PauliString& p, bool conjugate, int flavour_factors);

/// Nullspace of the vectorised constraint system plus every Pauli string
/// lying in it, canonically phased and ordered by square sign (+ first)
/// then label.
SymmetrySolution solve(const HamiltonianModel& model, const SymmetryQuery& q,
                       double tol = kDefaultTol);

/// An additive perturbation λ·V·p^α.
struct Perturbation {
    Monomial monomial;
    ComplexMatrix matrix;
    double strength = 1.0;
};

/// ‖D·H^σ(p)·D⁻¹ − ε·H(S p)‖_max for the full (not term-wise) Hamiltonian at
/// the query's mass setting, optionally perturbed. For chirality this is
/// max(‖[D, H₀(p)]‖, ‖{D, β}‖) with H₀ the massless (perturbed) Hamiltonian.
double invariance_residual(const HamiltonianModel& model, const SymmetryQuery& q,
                           const ComplexMatrix& d, std::span<const double> p,
                           const std::optional<Perturbation>& extra = std::nullopt);

/// Largest residual over `samples` random momenta with components in [−2, 2],
/// scaled by 1/max(1, ‖H(p)‖_max).
double max_invariance_residual(const HamiltonianModel& model, const SymmetryQuery& q,
                               const ComplexMatrix& d, unsigned seed, int samples = 16,
                               const std::optional<Perturbation>& extra = std::nullopt);

// --- operator sets and relations ------------------------------------------

/// The realised operator(s) for one symmetry kind. For a pair of
/// inequivalent representatives, `plus`/`minus` follow the D_± labelling;
/// otherwise `single` holds the unique representative.
struct LabelledOperator {
    SymmetryKind kind;
    bool massless = false;  // setting the representatives were found at
    std::optional<Representative> single;
    std::optional<Representative> plus;
    std::optional<Representative> minus;
    int count = 0;  // number of Pauli-string representatives
    std::vector<Representative> all;

    bool is_pair() const { return plus.has_value() && minus.has_value(); }
};

/// Solves every kind for the model, preferring the massive setting and
/// falling back to the massless one. Particle-hole pairs (both squares +1)
/// are labelled through D_+(M) ∝ D_+(C)·D_+(T)*.
std::vector<LabelledOperator> labelled_operators(const HamiltonianModel& model,
                                                 double tol = kDefaultTol);

/// Same labelling, at one fixed mass setting (no fallback).
std::vector<LabelledOperator> labelled_operators_at(const HamiltonianModel& model, bool massless,
                                                    double tol = kDefaultTol);

enum class RelationStatus { Verified, Failed, Skipped };
std::string to_string(RelationStatus s);

struct RelationResult {
    std::string name;
    RelationStatus status = RelationStatus::Skipped;
    Complex scalar{0.0, 0.0};  // lhs = scalar · rhs
    double residual = 0.0;
    std::string detail;
};

/// Checks D(M) ∝ D(C)·D(T)*, D(χ) ∝ β·D(M) (pairs: D_±(χ) ∝ β·D_∓(M) and
/// D_±(χ) ∝ −i v_x v_y·D_±(M)), and for flavoured models
/// D_+(S)·D_−(S) ∝ 1 ⊗ τ_z for every paired symmetry.
std::vector<RelationResult> relation_check(const HamiltonianModel& model,
                                           double tol = kDefaultTol);

} // namespace dirsym
