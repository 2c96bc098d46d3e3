#include "dirsym/symsolve.hpp"

#include <algorithm>
#include <random>

namespace dirsym {

std::string symbol(SymmetryKind kind) {
    switch (kind) {
    case SymmetryKind::ParityX: return "P_x";
    case SymmetryKind::ParityY: return "P_y";
    case SymmetryKind::Parity: return "P";
    case SymmetryKind::TimeReversal: return "T";
    case SymmetryKind::ParticleHole: return "C";
    case SymmetryKind::EnergyReflection: return "M";
    case SymmetryKind::Chirality: return "chi";
    }
    return "?";
}

SymmetryKind kind_from_symbol(const std::string& text) {
    for (auto k : {SymmetryKind::ParityX, SymmetryKind::ParityY, SymmetryKind::Parity,
                   SymmetryKind::TimeReversal, SymmetryKind::ParticleHole,
                   SymmetryKind::EnergyReflection, SymmetryKind::Chirality})
        if (symbol(k) == text) return k;
    throw Error("unknown symmetry '" + text + "' (valid: P_x, P_y, P, T, C, M, chi)");
}

bool is_antiunitary(SymmetryKind kind) {
    return kind == SymmetryKind::TimeReversal || kind == SymmetryKind::ParticleHole;
}

std::vector<SymmetryKind> symmetry_kinds(int d) {
    std::vector<SymmetryKind> out;
    if (d == 2) {
        out = {SymmetryKind::ParityX, SymmetryKind::ParityY};
    } else {
        out = {SymmetryKind::Parity};
    }
    out.insert(out.end(), {SymmetryKind::TimeReversal, SymmetryKind::ParticleHole,
                           SymmetryKind::EnergyReflection, SymmetryKind::Chirality});
    return out;
}

SymmetryQuery SymmetryQuery::make(SymmetryKind kind, int d, bool massless) {
    const RealMatrix id = RealMatrix::Identity(d, d);
    switch (kind) {
    case SymmetryKind::ParityX:
    case SymmetryKind::ParityY: {
        if (d != 2)
            throw Error("P_x and P_y are defined for d = 2; use P (full inversion) for d = " +
                        std::to_string(d));
        RealMatrix s = id;
        s(kind == SymmetryKind::ParityX ? 1 : 0, kind == SymmetryKind::ParityX ? 1 : 0) = -1.0;
        return {kind, false, s, +1, massless};
    }
    case SymmetryKind::Parity:
        if (d == 2)
            throw Error("full inversion in d = 2 is a rotation by pi; use P_x or P_y");
        return {kind, false, -id, +1, massless};
    case SymmetryKind::TimeReversal: return {kind, true, -id, +1, massless};
    case SymmetryKind::ParticleHole: return {kind, true, -id, -1, massless};
    case SymmetryKind::EnergyReflection: return {kind, false, id, -1, massless};
    case SymmetryKind::Chirality: return {kind, false, id, +1, massless};
    }
    throw Error("invalid symmetry kind");
}

std::string SymmetryQuery::to_string() const {
    return symbol(kind) + (massless ? " (massless)" : " (massive)");
}

ComplexMatrix ConstraintSystem::stacked() const {
    const Eigen::Index n2 = n * n;
    ComplexMatrix rows(static_cast<Eigen::Index>(blocks.size()) * n2, n2);
    const ComplexMatrix id = identity(n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        rows.middleRows(static_cast<Eigen::Index>(b) * n2, n2) =
            kron(blocks[b].lhs.transpose(), id) - kron(id, blocks[b].rhs);
    }
    return rows;
}

ConstraintSystem build_constraints(const HamiltonianModel& model, const SymmetryQuery& q) {
    ConstraintSystem sys;
    sys.n = model.size();

    if (q.kind == SymmetryKind::Chirality) {
        for (const auto& [mono, coeff] : model.polynomial(false, 0.0))
            sys.blocks.push_back({mono, coeff, coeff});
        if (const auto& beta = model.mass_matrix())
            sys.blocks.push_back({Monomial::constant(model.dimension()), *beta, -*beta});
        return sys;
    }

    const bool include_mass = !(q.massless || model.is_massless());
    const MatrixPolynomial base = model.polynomial(include_mass, 1.0);
    const MatrixPolynomial mapped = substitute(base, q.momentum_map);

    std::vector<Monomial> monomials;
    for (const auto& [m, _] : base) monomials.push_back(m);
    for (const auto& [m, _] : mapped)
        if (!base.contains(m)) monomials.push_back(m);
    std::sort(monomials.begin(), monomials.end());

    const ComplexMatrix zero = ComplexMatrix::Zero(sys.n, sys.n);
    for (const auto& m : monomials) {
        ComplexMatrix lhs = base.contains(m) ? base.at(m) : zero;
        if (q.conjugate) lhs = lhs.conjugate().eval();
        ComplexMatrix rhs = mapped.contains(m) ? mapped.at(m) : zero;
        rhs *= static_cast<double>(q.energy_sign);
        sys.blocks.push_back({m, std::move(lhs), std::move(rhs)});
    }
    return sys;
}

std::string to_string(SquareSign s) {
    switch (s) {
    case SquareSign::Plus: return "+1";
    case SquareSign::Minus: return "-1";
    case SquareSign::NonScalar: return "non-scalar";
    }
    return "?";
}

SquareSign classify_square(const ComplexMatrix& d, bool conjugate, double tol) {
    if (!is_unitary(d, tol)) throw Error("classify_square: input is not unitary");
    const ComplexMatrix sq = conjugate ? ComplexMatrix(d * d.conjugate()) : ComplexMatrix(d * d);
    const ComplexMatrix id = identity(d.rows());
    if (max_abs(sq - id) <= tol) return SquareSign::Plus;
    if (max_abs(sq + id) <= tol) return SquareSign::Minus;
    return SquareSign::NonScalar;
}

PauliString canonical_phase(const PauliString& p, bool conjugate, int flavour_factors) {
    int ys = 0;
    if (conjugate) {
        ys = p.count(Pauli::Y);
    } else {
        const auto& f = p.factors();
        for (std::size_t j = f.size() - static_cast<std::size_t>(flavour_factors); j < f.size(); ++j)
            ys += (f[j] == Pauli::Y);
    }
    // i^{#Y}·Y^{⊗#Y} is real; modulo sign that is phase 1 or i.
    return p.with_phase(ys % 2);
}

SymmetrySolution solve(const HamiltonianModel& model, const SymmetryQuery& q, double tol) {
    SymmetrySolution sol{q, 0, {}};
    const ConstraintSystem sys = build_constraints(model, q);
    const ComplexMatrix c = sys.stacked();
    sol.nullity = static_cast<int>(nullspace(c, tol).size());
    if (sol.nullity == 0) return sol;

    const double scale = tol * std::max(1.0, c.norm());
    for (const auto& p : PauliString::all(model.factor_count())) {
        const ComplexVector v = vectorize(p.matrix());
        if ((c * v).norm() > scale * v.norm()) continue;
        const PauliString canon = canonical_phase(p, q.conjugate, model.flavour_factors());
        sol.representatives.push_back({canon, classify_square(canon.matrix(), q.conjugate, tol)});
    }
    std::stable_sort(sol.representatives.begin(), sol.representatives.end(),
                     [](const Representative& a, const Representative& b) {
                         if (a.square != b.square) return a.square < b.square;
                         return a.string.factors() < b.string.factors();
                     });
    return sol;
}

double invariance_residual(const HamiltonianModel& model, const SymmetryQuery& q,
                           const ComplexMatrix& d, std::span<const double> p,
                           const std::optional<Perturbation>& extra) {
    const bool chiral = q.kind == SymmetryKind::Chirality;
    const bool include_mass = !(chiral || q.massless || model.is_massless());
    const MatrixPolynomial poly = model.polynomial(include_mass, model.mass());
    const Eigen::Index n = model.size();

    auto hamiltonian = [&](std::span<const double> k) {
        ComplexMatrix h = evaluate(poly, k, n);
        if (extra) h += extra->strength * extra->monomial.evaluate(k) * extra->matrix;
        return h;
    };

    const ComplexMatrix h = hamiltonian(p);
    if (chiral) {
        double r = max_abs(d * h - h * d);
        if (const auto& beta = model.mass_matrix()) r = std::max(r, max_abs(d * *beta + *beta * d));
        return r;
    }

    const Eigen::Map<const Eigen::VectorXd> pv(p.data(), static_cast<Eigen::Index>(p.size()));
    const Eigen::VectorXd sp = q.momentum_map * pv;
    const ComplexMatrix target =
        static_cast<double>(q.energy_sign) * hamiltonian(std::span<const double>(sp.data(), sp.size()));
    const ComplexMatrix hs = q.conjugate ? ComplexMatrix(h.conjugate()) : h;
    const ComplexMatrix lhs = d * hs * d.inverse();
    return max_abs(lhs - target);
}

double max_invariance_residual(const HamiltonianModel& model, const SymmetryQuery& q,
                               const ComplexMatrix& d, unsigned seed, int samples,
                               const std::optional<Perturbation>& extra) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    std::vector<double> p(static_cast<std::size_t>(model.dimension()));
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        for (double& x : p) x = uni(rng);
        const double scale = std::max(1.0, max_abs(evaluate(model, p)));
        worst = std::max(worst, invariance_residual(model, q, d, p, extra) / scale);
    }
    return worst;
}

} // namespace dirsym
