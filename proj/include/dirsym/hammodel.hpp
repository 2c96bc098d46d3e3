#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirsym/matcore.hpp"

namespace dirsym {

/// p_1^{e_1} … p_d^{e_d}.
struct Monomial {
    std::vector<int> exponents;

    static Monomial constant(int d) { return {std::vector<int>(d, 0)}; }
    static Monomial linear(int d, int axis);

    int degree() const;
    double evaluate(std::span<const double> p) const;
    /// "1", "p_x", "p_x p_y", "p_z^2"; axes beyond z print as p_4, p_5, …
    std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Matrix-valued polynomial in momentum, keyed by monomial.
using MatrixPolynomial = std::map<Monomial, ComplexMatrix>;

struct Term {
    Monomial monomial;
    ComplexMatrix matrix;
};

/// H(p) = Σ_α M_α p^α + m·β.
///
/// `terms` holds the momentum-dependent part (degree 1 or 2). The constant
/// term is β scaled by the runtime mass, so the massless limit is a
/// parameter change rather than a different model. `flavour_factors` counts
/// the rightmost Pauli factors that act in flavour space (0 for
/// single-flavour models); it only affects how representatives are phased.
class HamiltonianModel {
public:
    HamiltonianModel(std::string name, int d, std::vector<Term> terms,
                     std::optional<ComplexMatrix> mass_matrix, double mass = 1.0,
                     int flavour_factors = 0);

    const std::string& name() const { return name_; }
    int dimension() const { return d_; }
    Eigen::Index size() const { return n_; }
    double mass() const { return mass_; }
    int flavour_factors() const { return flavour_factors_; }
    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<ComplexMatrix>& mass_matrix() const { return beta_; }

    HamiltonianModel with_mass(double mass) const;
    bool is_massless() const { return mass_ == 0.0 || !beta_.has_value(); }

    /// Coefficient of p_axis, or nullopt if the model has no such linear term.
    std::optional<ComplexMatrix> velocity(int axis) const;

    /// Momentum polynomial of H. With include_mass the constant term is
    /// `mass_scale`·β (pass 1 for the structural constant matrix).
    MatrixPolynomial polynomial(bool include_mass, double mass_scale) const;

    /// Number of Pauli factors in the matrix side, log2(n).
    int factor_count() const;

private:
    std::string name_;
    int d_;
    Eigen::Index n_;
    std::vector<Term> terms_;
    std::optional<ComplexMatrix> beta_;
    double mass_;
    int flavour_factors_;
};

/// Built-in Dirac models: dirac_1p1, dirac_2p1, dirac_2f_2p1, dirac_3p1.
HamiltonianModel zoo(const std::string& name, double mass = 1.0);
const std::vector<std::string>& zoo_names();

/// Σ_α M_α Π_j (Σ_k S_jk p_k)^{α_j} re-expanded in monomials of p, i.e. the
/// polynomial of p ↦ H(S p).
MatrixPolynomial substitute(const MatrixPolynomial& poly, const RealMatrix& s);

ComplexMatrix evaluate(const MatrixPolynomial& poly, std::span<const double> p, Eigen::Index n);
ComplexMatrix evaluate(const HamiltonianModel& model, std::span<const double> p);

/// Ascending eigenvalues of H(p).
std::vector<double> spectrum(const HamiltonianModel& model, std::span<const double> p);

enum class Branch { Positive, Negative };

/// Normalised eigenvector of H(p) on the requested energy branch, phased so
/// its first nonzero component is real and positive.
///
/// For the massless single-flavour (2+1)D model the closed form
/// (E±, p_x + i p_y) is used; otherwise the eigenvector is computed
/// numerically (for degenerate branches, the first vector of the eigenspace).
/// Throws at the degenerate point p = 0, m = 0.
ComplexVector eigenspinor(const HamiltonianModel& model, Branch branch,
                          std::span<const double> p);

/// S_z = (v_x v_y − v_y v_x)/(4i). Requires d ≥ 2.
ComplexMatrix spin_z(const HamiltonianModel& model);

/// Planar rotation of (p_x, p_y) by angle, other components untouched.
RealMatrix planar_rotation(int d, double angle);

struct RotationCheck {
    double residual = 0.0;        // ‖U H(p) U† − H(R(φ)⁻¹ p)‖_max
    ComplexMatrix spin_rotation;  // U = exp(iφ S_z)
};

/// Compares exp(iφS_z) H(p) exp(−iφS_z) with H at the inversely rotated
/// momentum (the orbital factor exp(iφL_z) rotates p by −φ). Requires d ≥ 2.
RotationCheck rotation_check(const HamiltonianModel& model, double angle,
                             std::span<const double> p);

/// exp(2πi S_z); equals −I for half-integer spin.
ComplexMatrix full_turn(const HamiltonianModel& model);

/// Result of applying a (possibly antiunitary) operator to an eigenstate:
/// D·ψ(p)^σ = phase·ψ(S p) + remainder.
struct EigenstateAction {
    Branch branch;
    std::vector<double> p;
    ComplexVector spinor;  // D·ψ(p)^σ
    Complex phase;         // overlap with ψ(S p)
    double residual;       // ‖D·ψ(p)^σ − phase·ψ(S p)‖
};

EigenstateAction transform_eigenstate(const HamiltonianModel& model, Branch branch,
                                      std::span<const double> p, const ComplexMatrix& d,
                                      bool conjugate, const RealMatrix& momentum_map);

/// ⟨ψ|op|ψ⟩ for normalised ψ (real part).
double expectation(const ComplexMatrix& op, const ComplexVector& psi);

} // namespace dirsym
