#include "dirsym/hammodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dirsym/pauli.hpp"

namespace dirsym {

Monomial Monomial::linear(int d, int axis) {
    Monomial m = constant(d);
    m.exponents.at(axis) = 1;
    return m;
}

int Monomial::degree() const {
    int s = 0;
    for (int e : exponents) s += e;
    return s;
}

double Monomial::evaluate(std::span<const double> p) const {
    double v = 1.0;
    for (std::size_t j = 0; j < exponents.size(); ++j)
        for (int e = 0; e < exponents[j]; ++e) v *= p[j];
    return v;
}

std::string Monomial::to_string() const {
    static constexpr const char* axis[] = {"x", "y", "z"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] == 0) continue;
        if (!first) os << ' ';
        first = false;
        if (exponents.size() == 1) os << "p";
        else if (j < 3) os << "p_" << axis[j];
        else os << "p_" << (j + 1);
        if (exponents[j] > 1) os << '^' << exponents[j];
    }
    return first ? "1" : os.str();
}

HamiltonianModel::HamiltonianModel(std::string name, int d, std::vector<Term> terms,
                                   std::optional<ComplexMatrix> mass_matrix, double mass,
                                   int flavour_factors)
    : name_(std::move(name)), d_(d), n_(0), terms_(std::move(terms)),
      beta_(std::move(mass_matrix)), mass_(mass), flavour_factors_(flavour_factors) {
    if (d_ < 1 || d_ > 3) throw Error("model '" + name_ + "': spatial dimension must be 1, 2 or 3");
    if (!(mass_ >= 0.0) || !std::isfinite(mass_))
        throw Error("model '" + name_ + "': mass must be a finite non-negative number");
    if (terms_.empty() && !beta_) throw Error("model '" + name_ + "': no terms");

    n_ = terms_.empty() ? beta_->rows() : terms_.front().matrix.rows();
    auto check_matrix = [&](const ComplexMatrix& m, const std::string& what) {
        if (m.rows() != n_ || m.cols() != n_)
            throw Error("model '" + name_ + "': " + what + " is not " + std::to_string(n_) + "x" +
                        std::to_string(n_));
        if (!m.allFinite()) throw Error("model '" + name_ + "': " + what + " has non-finite entries");
        if (!is_hermitian(m)) throw Error("model '" + name_ + "': " + what + " is not Hermitian");
    };
    for (const auto& t : terms_) {
        if (static_cast<int>(t.monomial.exponents.size()) != d_)
            throw Error("model '" + name_ + "': monomial length does not match d");
        for (int e : t.monomial.exponents)
            if (e < 0) throw Error("model '" + name_ + "': negative exponent");
        const int deg = t.monomial.degree();
        if (deg < 1 || deg > 2)
            throw Error("model '" + name_ + "': momentum terms must have degree 1 or 2");
        check_matrix(t.matrix, "coefficient of " + t.monomial.to_string());
    }
    if (beta_) check_matrix(*beta_, "mass matrix");
    if (!is_power_of_two(n_) || n_ < 2) throw Error("model '" + name_ + "': matrix side must be a power of two");
    if (flavour_factors_ < 0 || flavour_factors_ >= factor_count())
        throw Error("model '" + name_ + "': flavour_factors out of range");
}

HamiltonianModel HamiltonianModel::with_mass(double mass) const {
    HamiltonianModel copy = *this;
    if (!(mass >= 0.0) || !std::isfinite(mass))
        throw Error("mass must be a finite non-negative number");
    copy.mass_ = mass;
    return copy;
}

std::optional<ComplexMatrix> HamiltonianModel::velocity(int axis) const {
    const Monomial target = Monomial::linear(d_, axis);
    std::optional<ComplexMatrix> out;
    for (const auto& t : terms_) {
        if (t.monomial != target) continue;
        if (out) *out += t.matrix;
        else out = t.matrix;
    }
    return out;
}

MatrixPolynomial HamiltonianModel::polynomial(bool include_mass, double mass_scale) const {
    MatrixPolynomial poly;
    for (const auto& t : terms_) {
        auto [it, inserted] = poly.try_emplace(t.monomial, t.matrix);
        if (!inserted) it->second += t.matrix;
    }
    if (include_mass && beta_ && mass_scale != 0.0) poly.emplace(Monomial::constant(d_), mass_scale * *beta_);
    return poly;
}

int HamiltonianModel::factor_count() const {
    int k = 0;
    while ((Eigen::Index{1} << k) < n_) ++k;
    return k;
}

namespace {

ComplexMatrix ps(const char* text) { return PauliString::parse(text).matrix(); }

} // namespace

const std::vector<std::string>& zoo_names() {
    static const std::vector<std::string> names = {"dirac_1p1", "dirac_2p1", "dirac_2f_2p1",
                                                   "dirac_3p1"};
    return names;
}

HamiltonianModel zoo(const std::string& name, double mass) {
    if (name == "dirac_1p1") {
        return HamiltonianModel(name, 1, {{Monomial::linear(1, 0), ps("X")}}, ps("Z"), mass);
    }
    if (name == "dirac_2p1") {
        return HamiltonianModel(name, 2,
                                {{Monomial::linear(2, 0), ps("X")}, {Monomial::linear(2, 1), ps("Y")}},
                                ps("Z"), mass);
    }
    if (name == "dirac_2f_2p1") {
        // Dirac factor first, flavour factor last.
        return HamiltonianModel(name, 2,
                                {{Monomial::linear(2, 0), ps("XI")}, {Monomial::linear(2, 1), ps("YI")}},
                                ps("ZZ"), mass, 1);
    }
    if (name == "dirac_3p1") {
        // Standard representation: β = diag(I, −I), v_j = antidiag(σ_j, σ_j); only v_2 is imaginary.
        return HamiltonianModel(name, 3,
                                {{Monomial::linear(3, 0), ps("XX")},
                                 {Monomial::linear(3, 1), ps("XY")},
                                 {Monomial::linear(3, 2), ps("XZ")}},
                                ps("ZI"), mass);
    }
    std::string valid;
    for (const auto& n : zoo_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw Error("unknown model '" + name + "' (valid: " + valid + ")");
}

MatrixPolynomial substitute(const MatrixPolynomial& poly, const RealMatrix& s) {
    MatrixPolynomial out;
    for (const auto& [mono, coeff] : poly) {
        const int d = static_cast<int>(mono.exponents.size());
        if (s.rows() != d || s.cols() != d) throw Error("substitute: momentum map has wrong size");
        // Expand Π_j (Σ_k S_jk p_k)^{e_j} as a scalar polynomial.
        std::map<Monomial, double> expansion{{Monomial::constant(d), 1.0}};
        for (int j = 0; j < d; ++j) {
            for (int e = 0; e < mono.exponents[j]; ++e) {
                std::map<Monomial, double> next;
                for (const auto& [m, c] : expansion) {
                    for (int k = 0; k < d; ++k) {
                        if (s(j, k) == 0.0) continue;
                        Monomial grown = m;
                        ++grown.exponents[k];
                        next[grown] += c * s(j, k);
                    }
                }
                expansion = std::move(next);
            }
        }
        for (const auto& [m, c] : expansion) {
            if (c == 0.0) continue;
            auto [it, inserted] = out.try_emplace(m, c * coeff);
            if (!inserted) it->second += c * coeff;
        }
    }
    return out;
}

ComplexMatrix evaluate(const MatrixPolynomial& poly, std::span<const double> p, Eigen::Index n) {
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (const auto& [mono, coeff] : poly) {
        if (mono.exponents.size() != p.size()) throw Error("evaluate: momentum has wrong dimension");
        h += mono.evaluate(p) * coeff;
    }
    return h;
}

ComplexMatrix evaluate(const HamiltonianModel& model, std::span<const double> p) {
    if (static_cast<int>(p.size()) != model.dimension())
        throw Error("evaluate: momentum has " + std::to_string(p.size()) + " components, model '" +
                    model.name() + "' has d = " + std::to_string(model.dimension()));
    return evaluate(model.polynomial(true, model.mass()), p, model.size());
}

std::vector<double> spectrum(const HamiltonianModel& model, std::span<const double> p) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(evaluate(model, p), Eigen::EigenvaluesOnly);
    const auto& w = es.eigenvalues();
    return {w.data(), w.data() + w.size()};
}

namespace {

void fix_phase(ComplexVector& v) {
    v.normalize();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-12) {
            v *= std::conj(v(i)) / std::abs(v(i));
            v(i) = std::abs(v(i));
            return;
        }
    }
}

} // namespace

ComplexVector eigenspinor(const HamiltonianModel& model, Branch branch, std::span<const double> p) {
    if (static_cast<int>(p.size()) != model.dimension())
        throw Error("eigenspinor: momentum has wrong dimension");
    double p2 = 0.0;
    for (double x : p) p2 += x * x;
    if (p2 == 0.0 && model.is_massless())
        throw Error("eigenspinor: degenerate point p = 0 with m = 0");

    ComplexVector v;
    if (model.name() == "dirac_2p1" && model.is_massless()) {
        const double e = (branch == Branch::Positive ? 1.0 : -1.0) * std::sqrt(p2);
        v.resize(2);
        v << Complex(e, 0.0), Complex(p[0], p[1]);
    } else {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(evaluate(model, p));
        const Eigen::Index n = model.size();
        // Ascending order: the negative branch occupies the first n/2 columns.
        v = es.eigenvectors().col(branch == Branch::Positive ? n / 2 : 0);
    }
    fix_phase(v);
    return v;
}

ComplexMatrix spin_z(const HamiltonianModel& model) {
    if (model.dimension() < 2) throw Error("spin_z: no spin in one spatial dimension");
    const auto vx = model.velocity(0), vy = model.velocity(1);
    if (!vx || !vy) throw Error("spin_z: model lacks linear p_x or p_y terms");
    return (*vx * *vy - *vy * *vx) / Complex(0.0, 4.0);
}

RealMatrix planar_rotation(int d, double angle) {
    if (d < 2) throw Error("planar_rotation: needs d >= 2");
    RealMatrix r = RealMatrix::Identity(d, d);
    r(0, 0) = std::cos(angle);
    r(0, 1) = -std::sin(angle);
    r(1, 0) = std::sin(angle);
    r(1, 1) = std::cos(angle);
    return r;
}

RotationCheck rotation_check(const HamiltonianModel& model, double angle, std::span<const double> p) {
    if (model.dimension() < 2) throw Error("rotation_check: unsupported for d = 1");
    RotationCheck out;
    out.spin_rotation = exp_i_hermitian(spin_z(model), angle);
    const Eigen::Map<const Eigen::VectorXd> pv(p.data(), static_cast<Eigen::Index>(p.size()));
    const Eigen::VectorXd rotated = planar_rotation(model.dimension(), angle).transpose() * pv;
    const ComplexMatrix lhs = out.spin_rotation * evaluate(model, p) * out.spin_rotation.adjoint();
    const ComplexMatrix rhs = evaluate(model, std::span<const double>(rotated.data(), rotated.size()));
    out.residual = max_abs(lhs - rhs);
    return out;
}

ComplexMatrix full_turn(const HamiltonianModel& model) {
    return exp_i_hermitian(spin_z(model), 2.0 * std::numbers::pi);
}

EigenstateAction transform_eigenstate(const HamiltonianModel& model, Branch branch,
                                      std::span<const double> p, const ComplexMatrix& d,
                                      bool conjugate, const RealMatrix& momentum_map) {
    const ComplexVector psi = eigenspinor(model, branch, p);
    const Eigen::Map<const Eigen::VectorXd> pv(p.data(), static_cast<Eigen::Index>(p.size()));
    const Eigen::VectorXd q = momentum_map * pv;
    const ComplexVector target =
        eigenspinor(model, branch, std::span<const double>(q.data(), q.size()));

    EigenstateAction out{branch, {p.begin(), p.end()}, {}, {}, 0.0};
    out.spinor = d * (conjugate ? ComplexVector(psi.conjugate()) : psi);
    out.phase = target.dot(out.spinor);
    out.residual = (out.spinor - out.phase * target).norm();
    return out;
}

double expectation(const ComplexMatrix& op, const ComplexVector& psi) {
    return psi.dot(op * psi).real();
}

} // namespace dirsym
