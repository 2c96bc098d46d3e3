#include "dirsym/classify.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <sstream>

namespace dirsym {

SymmetryReport audit(const HamiltonianModel& model, const AuditOptions& opts) {
    SymmetryReport report;
    report.model = model.name();
    report.d = model.dimension();
    report.n = model.size();
    report.mass = model.mass();

    for (SymmetryKind kind : symmetry_kinds(model.dimension())) {
        SymmetryEntry entry{kind,
                            solve(model, SymmetryQuery::make(kind, model.dimension(), false), opts.tol),
                            solve(model, SymmetryQuery::make(kind, model.dimension(), true), opts.tol)};
        for (const SymmetrySolution* sol : {&entry.massive, &entry.massless}) {
            for (const auto& rep : sol->representatives) {
                const double r =
                    max_invariance_residual(model, sol->query, rep.matrix(), opts.seed, opts.samples);
                entry.max_residual = std::max(entry.max_residual, r);
            }
        }
        if (entry.max_residual > opts.tol) report.verified = false;
        report.entries.push_back(std::move(entry));
    }

    report.operators = labelled_operators(model, opts.tol);
    report.relations = relation_check(model, opts.tol);

    if (model.dimension() >= 2 && model.velocity(0) && model.velocity(1)) {
        RotationSummary rot;
        rot.spin_z = spin_z(model);
        rot.full_turn = full_turn(model);
        rot.full_turn_is_minus_identity = max_abs(rot.full_turn + identity(model.size())) <= opts.tol;
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> comp(-2.0, 2.0);
        std::vector<double> p(static_cast<std::size_t>(model.dimension()));
        for (int s = 0; s < opts.rotation_samples; ++s) {
            const double phi = angle(rng);
            for (double& x : p) x = comp(rng);
            rot.max_residual = std::max(rot.max_residual, rotation_check(model, phi, p).residual);
        }
        rot.samples = opts.rotation_samples;
        report.rotation = std::move(rot);
    }
    return report;
}

// --- operator table -------------------------------------------------------

int TableReport::matched_count() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](const TableEntry& e) { return e.matched; }));
}

namespace {

std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string render(const ComplexMatrix& m) {
    if (auto p = as_pauli_string(m)) return p->to_string();
    return "(not a Pauli string)";
}

// Compares a computed matrix with a reference Pauli string up to a unit phase.
bool same_up_to_phase(const ComplexMatrix& found, const std::string& expected, double tol, double& residual) {
    const ComplexMatrix ref = PauliString::parse(expected).matrix();
    const double bb = ref.squaredNorm();
    const Complex c = (ref.adjoint() * found).trace() / bb;
    residual = max_abs(found - c * ref);
    return residual <= tol && std::abs(std::abs(c) - 1.0) <= tol;
}

const LabelledOperator& op_of(const std::vector<LabelledOperator>& ops, SymmetryKind kind) {
    for (const auto& op : ops)
        if (op.kind == kind) return op;
    throw Error("operator table: missing symmetry " + symbol(kind));
}

} // namespace

TableReport reproduce_operator_table(const AuditOptions& opts) {
    const HamiltonianModel model = zoo("dirac_2f_2p1");
    const ComplexMatrix beta = *model.mass_matrix();
    const ComplexMatrix vx = *model.velocity(0), vy = *model.velocity(1);
    TableReport table;

    auto add_matrix = [&](std::string label, std::string expected, const ComplexMatrix& found) {
        TableEntry e{std::move(label), expected, render(found), false, 0.0};
        e.matched = same_up_to_phase(found, expected, opts.tol, e.residual);
        table.entries.push_back(std::move(e));
    };
    add_matrix("v_x", "XI", vx);
    add_matrix("v_y", "YI", vy);
    add_matrix("β ≡ γ⁰", "ZZ", beta);
    add_matrix("γ¹", "i·YZ", beta * vx);
    add_matrix("γ²", "-i·XZ", beta * vy);
    add_matrix("2S_z", "ZI", 2.0 * spin_z(model));

    const auto ops = labelled_operators(model, opts.tol);

    // One table column per (kind, ±); parity columns cover both axes.
    struct Column {
        std::string label;
        std::vector<std::pair<SymmetryKind, std::string>> parts;
        int sign;
    };
    const std::vector<Column> columns = {
        {"D+(P_ν)", {{SymmetryKind::ParityX, "XX"}, {SymmetryKind::ParityY, "YX"}}, +1},
        {"D-(P_ν)", {{SymmetryKind::ParityX, "i·XY"}, {SymmetryKind::ParityY, "i·YY"}}, -1},
        {"D+(T)", {{SymmetryKind::TimeReversal, "YY"}}, +1},
        {"D-(T)", {{SymmetryKind::TimeReversal, "-i·YX"}}, -1},
        {"D+(C)", {{SymmetryKind::ParticleHole, "XZ"}}, +1},
        {"D-(C)", {{SymmetryKind::ParticleHole, "XI"}}, -1},
        {"D+(M)", {{SymmetryKind::EnergyReflection, "ZX"}}, +1},
        {"D-(M)", {{SymmetryKind::EnergyReflection, "i·ZY"}}, -1},
        {"D+(χ)", {{SymmetryKind::Chirality, "IX"}}, +1},
        {"D-(χ)", {{SymmetryKind::Chirality, "i·IY"}}, -1},
    };
    for (const auto& col : columns) {
        TableEntry e{col.label, "", "", true, 0.0};
        for (const auto& [kind, expected] : col.parts) {
            if (!e.expected.empty()) {
                e.expected += " / ";
                e.found += " / ";
            }
            e.expected += expected;
            const auto& op = op_of(ops, kind);
            if (!op.is_pair()) {
                e.found += "(missing)";
                e.matched = false;
                continue;
            }
            const Representative& rep = col.sign > 0 ? *op.plus : *op.minus;
            e.found += rep.string.to_string();
            double phase_residual = 0.0;
            const bool same = same_up_to_phase(rep.matrix(), expected, opts.tol, phase_residual);
            const double eq_residual = max_invariance_residual(
                model, SymmetryQuery::make(kind, model.dimension(), op.massless), rep.matrix(), opts.seed,
                opts.samples);
            e.residual = std::max({e.residual, phase_residual, eq_residual});
            e.matched = e.matched && same && eq_residual <= opts.tol;
        }
        table.entries.push_back(std::move(e));
    }
    return table;
}

// --- perturbations --------------------------------------------------------

std::string PerturbationTerm::to_string() const {
    std::string s = string.to_string();
    if (coefficient == 0.0) s = "0";
    else if (coefficient != 1.0) s = num(coefficient) + "·" + s;
    return monomial.degree() == 0 ? s : s + " " + monomial.to_string();
}

std::string VerdictEntry::name() const {
    return symbol(kind) + label + (massless ? " [m=0]" : "");
}

PerturbationClassifier::PerturbationClassifier(HamiltonianModel model, AuditOptions opts)
    : model_(std::move(model)), opts_(opts) {
    if (!model_.is_massless()) settings_.push_back(labelled_operators_at(model_, false, opts_.tol));
    auto massless = labelled_operators_at(model_, true, opts_.tol);
    if (!settings_.empty()) {
        // The chirality condition does not depend on the mass setting.
        std::erase_if(massless, [](const LabelledOperator& op) { return op.kind == SymmetryKind::Chirality; });
    }
    settings_.push_back(std::move(massless));
}

PerturbationVerdict PerturbationClassifier::classify(const PerturbationTerm& term) const {
    if (term.string.dimension() != model_.size())
        throw Error("perturbation " + term.string.to_string() + " does not match the model's matrix side");
    if (static_cast<int>(term.monomial.exponents.size()) != model_.dimension())
        throw Error("perturbation monomial does not match the model's dimension");
    if (!term.string.is_hermitian()) throw Error("perturbation " + term.string.to_string() + " is not Hermitian");

    PerturbationVerdict verdict{term, {}, {}};
    const ComplexMatrix v = term.coefficient * term.string.matrix();
    for (const auto& ops : settings_) {
        for (const auto& op : ops) {
            const SymmetryQuery q = SymmetryQuery::make(op.kind, model_.dimension(), op.massless);
            for (const auto& rep : op.all) {
                std::string label;
                if (op.is_pair()) label = rep.string == op.plus->string ? "+" : "-";
                std::optional<bool> preserves;
                for (double lambda : kPerturbationStrengths) {
                    const double r = max_invariance_residual(model_, q, rep.matrix(), opts_.seed, opts_.samples,
                                                             Perturbation{term.monomial, v, lambda});
                    const bool ok = r <= opts_.tol;
                    if (preserves && *preserves != ok)
                        throw Error("verdict for " + symbol(op.kind) + " depends on the perturbation strength");
                    preserves = ok;
                }
                VerdictEntry entry{op.kind, label, op.massless, rep.string, *preserves};
                if (entry.preserves) verdict.surviving.push_back(entry.name());
                verdict.entries.push_back(std::move(entry));
            }
        }
    }
    return verdict;
}

PerturbationVerdict classify_perturbation(const HamiltonianModel& model, const PerturbationTerm& term,
                                          const AuditOptions& opts) {
    return PerturbationClassifier(model, opts).classify(term);
}

std::vector<PerturbationVerdict> enumerate_perturbations(const HamiltonianModel& model, int max_degree,
                                                         const AuditOptions& opts) {
    if (max_degree != 0 && max_degree != 1) throw Error("max_degree must be 0 or 1");
    const int d = model.dimension();
    std::vector<Monomial> monomials{Monomial::constant(d)};
    if (max_degree == 1)
        for (int j = 0; j < d; ++j) monomials.push_back(Monomial::linear(d, j));

    const PerturbationClassifier classifier(model, opts);
    std::vector<PerturbationVerdict> out;
    for (const auto& p : PauliString::all(model.factor_count()))
        for (const auto& m : monomials) out.push_back(classifier.classify({m, p}));
    return out;
}

} // namespace dirsym
