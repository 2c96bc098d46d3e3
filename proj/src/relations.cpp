#include "dirsym/symsolve.hpp"

#include <algorithm>

namespace dirsym {

std::string to_string(RelationStatus s) {
    switch (s) {
    case RelationStatus::Verified: return "verified";
    case RelationStatus::Failed: return "failed";
    case RelationStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

template <class Ops>
auto find(Ops& ops, SymmetryKind kind) -> decltype(&ops.front()) {
    for (auto& op : ops)
        if (op.kind == kind) return &op;
    return nullptr;
}

bool proportional(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return proportionality(a, b, tol).has_value();
}

RelationResult compare(std::string name, const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                       double tol) {
    RelationResult r;
    r.name = std::move(name);
    const double bb = rhs.squaredNorm();
    r.scalar = bb > 0.0 ? (rhs.adjoint() * lhs).trace() / bb : Complex{};
    r.residual = max_abs(lhs - r.scalar * rhs);
    const bool unit = std::abs(std::abs(r.scalar) - 1.0) <= tol;
    r.status = (r.residual <= tol && unit) ? RelationStatus::Verified : RelationStatus::Failed;
    return r;
}

RelationResult skipped(std::string name, std::string why) {
    RelationResult r;
    r.name = std::move(name);
    r.detail = std::move(why);
    return r;
}

const char* sign_char(int s) { return s > 0 ? "+" : "-"; }

const Representative& pick(const LabelledOperator& op, int s) { return s > 0 ? *op.plus : *op.minus; }

} // namespace

namespace {

LabelledOperator label(SymmetryKind kind, const SymmetrySolution& sol, bool massless) {
    const auto& reps = sol.representatives;
    LabelledOperator op{kind, massless, {}, {}, {}, static_cast<int>(reps.size()), reps};
    if (reps.size() == 1) {
        op.single = reps[0];
    } else if (reps.size() == 2) {
        // Sorted + before −; equal signs keep label order.
        op.plus = reps[0];
        op.minus = reps[1];
    }
    return op;
}

// Particle-hole partners share the square sign; fix the labels through
// D_+(M) ∝ D_+(C)·D_+(T)*.
void label_particle_hole(std::vector<LabelledOperator>& ops, double tol) {
    auto* c = find(ops, SymmetryKind::ParticleHole);
    const auto* t = find(ops, SymmetryKind::TimeReversal);
    const auto* m = find(ops, SymmetryKind::EnergyReflection);
    if (!(c && t && m && c->is_pair() && t->is_pair() && m->is_pair())) return;
    if (c->plus->square != c->minus->square) return;
    const ComplexMatrix tp = t->plus->matrix().conjugate();
    const ComplexMatrix mp = m->plus->matrix();
    if (!proportional(c->plus->matrix() * tp, mp, tol) &&
        proportional(c->minus->matrix() * tp, mp, tol))
        std::swap(c->plus, c->minus);
}

} // namespace

std::vector<LabelledOperator> labelled_operators(const HamiltonianModel& model, double tol) {
    std::vector<LabelledOperator> ops;
    for (SymmetryKind kind : symmetry_kinds(model.dimension())) {
        SymmetrySolution sol = solve(model, SymmetryQuery::make(kind, model.dimension(), false), tol);
        bool massless = model.is_massless();
        if (!sol.exists() && !model.is_massless()) {
            sol = solve(model, SymmetryQuery::make(kind, model.dimension(), true), tol);
            massless = true;
        }
        ops.push_back(label(kind, sol, massless));
    }
    label_particle_hole(ops, tol);
    return ops;
}

std::vector<LabelledOperator> labelled_operators_at(const HamiltonianModel& model, bool massless,
                                                    double tol) {
    std::vector<LabelledOperator> ops;
    for (SymmetryKind kind : symmetry_kinds(model.dimension()))
        ops.push_back(label(kind, solve(model, SymmetryQuery::make(kind, model.dimension(), massless), tol),
                            massless || model.is_massless()));
    label_particle_hole(ops, tol);
    return ops;
}

std::vector<RelationResult> relation_check(const HamiltonianModel& model, double tol) {
    const auto ops = labelled_operators(model, tol);
    const auto* t = find(ops, SymmetryKind::TimeReversal);
    const auto* c = find(ops, SymmetryKind::ParticleHole);
    const auto* m = find(ops, SymmetryKind::EnergyReflection);
    const auto* chi = find(ops, SymmetryKind::Chirality);
    std::vector<RelationResult> out;

    // Energy reflection as the product of particle-hole and time reversal.
    if (t->single && c->single && m->single) {
        out.push_back(compare("D(M) ∝ D(C)·D(T)*", m->single->matrix(),
                              c->single->matrix() * t->single->matrix().conjugate(), tol));
    } else if (t->is_pair() && c->is_pair() && m->is_pair()) {
        for (int s : {+1, -1}) {
            for (int eps : {+1, -1}) {
                const std::string name = std::string("D") + sign_char(eps) + "(M) ∝ D" + sign_char(s) +
                                         "(C)·D" + sign_char(s * eps) + "(T)*";
                out.push_back(compare(name, pick(*m, eps).matrix(),
                                      pick(*c, s).matrix() * pick(*t, s * eps).matrix().conjugate(), tol));
            }
        }
    } else {
        out.push_back(skipped("D(M) ∝ D(C)·D(T)*", "T, C and M are not all realised with matching multiplicity"));
    }

    // Chirality from energy reflection.
    const auto& beta = model.mass_matrix();
    if (!beta) {
        out.push_back(skipped("D(chi) ∝ β·D(M)", "model has no mass matrix"));
    } else if (chi->single && m->single) {
        out.push_back(compare("D(chi) ∝ β·D(M)", chi->single->matrix(), *beta * m->single->matrix(), tol));
    } else if (chi->is_pair() && m->is_pair()) {
        std::optional<ComplexMatrix> vxvy;
        if (model.dimension() >= 2) {
            const auto vx = model.velocity(0), vy = model.velocity(1);
            if (vx && vy) vxvy = Complex(0.0, -1.0) * *vx * *vy;
        }
        for (int s : {+1, -1}) {
            out.push_back(compare(std::string("D") + sign_char(s) + "(chi) ∝ β·D" + sign_char(-s) + "(M)",
                                  pick(*chi, s).matrix(), *beta * pick(*m, -s).matrix(), tol));
            if (vxvy)
                out.push_back(compare(std::string("D") + sign_char(s) + "(chi) ∝ -i·v_x·v_y·D" + sign_char(s) + "(M)",
                                      pick(*chi, s).matrix(), *vxvy * pick(*m, s).matrix(), tol));
        }
    } else {
        out.push_back(skipped("D(chi) ∝ β·D(M)", "chi or M not realised with matching multiplicity"));
    }

    // Flavour product D_+(S)·D_−(S) ∝ 1 ⊗ τ_z.
    if (model.flavour_factors() > 0) {
        std::vector<Pauli> f(static_cast<std::size_t>(model.factor_count()), Pauli::I);
        f.back() = Pauli::Z;
        const ComplexMatrix tau_z = PauliString(f).matrix();
        for (const auto& op : ops) {
            const std::string name = "D+(" + symbol(op.kind) + ")·D-(" + symbol(op.kind) + ") ∝ 1⊗τ_z";
            if (!op.is_pair()) {
                out.push_back(skipped(name, "no representative pair"));
                continue;
            }
            out.push_back(compare(name, op.plus->matrix() * op.minus->matrix(), tau_z, tol));
        }
    }
    return out;
}

} // namespace dirsym
