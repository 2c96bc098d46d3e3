#include "dirsym/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace dirsym {

namespace {

std::string num(double x) {
    if (std::abs(x) < 1e-14) x = 0.0;
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

ojson square_json(SquareSign s) {
    switch (s) {
    case SquareSign::Plus: return 1;
    case SquareSign::Minus: return -1;
    default: return "non-scalar";
    }
}

std::string representatives_text(const SymmetrySolution& sol) {
    if (!sol.exists()) return "none (nullity " + std::to_string(sol.nullity) + ")";
    std::string s;
    for (const auto& r : sol.representatives) {
        if (!s.empty()) s += ", ";
        s += r.string.to_string() + " (" + to_string(r.square) + ")";
    }
    if (sol.nullity != static_cast<int>(sol.representatives.size()))
        s += " [nullity " + std::to_string(sol.nullity) + "]";
    return s;
}

ojson operator_json(const LabelledOperator& op) {
    ojson j;
    j["symmetry"] = symbol(op.kind);
    j["setting"] = op.massless ? "massless" : "massive";
    auto rep = [](const Representative& r) {
        return ojson{{"pauli", r.string.to_string()}, {"square", square_json(r.square)}};
    };
    if (op.single) j["D"] = rep(*op.single);
    if (op.is_pair()) {
        j["D+"] = rep(*op.plus);
        j["D-"] = rep(*op.minus);
    }
    j["count"] = op.count;
    return j;
}

std::string header(const std::string& title, const HamiltonianModel& model) {
    std::ostringstream os;
    os << "# " << title << ": " << model.name() << " (d = " << model.dimension() << ", n = " << model.size()
       << ", m = " << num(model.mass()) << ")\n\n";
    return os.str();
}

} // namespace

std::string render_pauli_sum(const ComplexMatrix& m) {
    const auto coeffs = pauli_decompose(m);
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [label, c] : coeffs) {
        const double re = std::abs(c.real()) < 1e-12 ? 0.0 : c.real();
        const double im = std::abs(c.imag()) < 1e-12 ? 0.0 : c.imag();
        std::string coef;
        bool negative = false;
        if (im == 0.0) {
            negative = re < 0;
            coef = std::abs(re) == 1.0 ? "" : num(std::abs(re)) + "·";
        } else if (re == 0.0) {
            negative = im < 0;
            coef = (std::abs(im) == 1.0 ? std::string("i") : num(std::abs(im)) + "i") + "·";
        } else {
            coef = "(" + num(re) + (im < 0 ? "-" : "+") + num(std::abs(im)) + "i)·";
        }
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        out += coef + label;
    }
    return out;
}

ojson to_json(const SymmetrySolution& sol) {
    ojson j;
    j["symmetry"] = symbol(sol.query.kind);
    j["massless"] = sol.query.massless;
    j["antiunitary"] = sol.query.conjugate;
    j["energy_sign"] = sol.query.energy_sign;
    j["nullity"] = sol.nullity;
    j["exists"] = sol.exists();
    ojson reps = ojson::array();
    for (const auto& r : sol.representatives)
        reps.push_back({{"pauli", r.string.to_string()}, {"square", square_json(r.square)}});
    j["representatives"] = std::move(reps);
    return j;
}

ojson to_json(const SymmetryReport& report) {
    ojson j;
    j["model"] = report.model;
    j["d"] = report.d;
    j["n"] = report.n;
    j["mass"] = report.mass;
    j["verified"] = report.verified;
    ojson entries = ojson::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"symmetry", symbol(e.kind)},
                           {"massive", to_json(e.massive)},
                           {"massless", to_json(e.massless)},
                           {"max_residual", e.max_residual}});
    }
    j["symmetries"] = std::move(entries);
    ojson ops = ojson::array();
    for (const auto& op : report.operators) ops.push_back(operator_json(op));
    j["operators"] = std::move(ops);
    ojson rels = ojson::array();
    for (const auto& r : report.relations) {
        ojson rj{{"name", r.name}, {"status", to_string(r.status)}};
        if (r.status != RelationStatus::Skipped) {
            rj["scalar"] = {r.scalar.real(), r.scalar.imag()};
            rj["residual"] = r.residual;
        }
        if (!r.detail.empty()) rj["detail"] = r.detail;
        rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    if (report.rotation) {
        const auto& rot = *report.rotation;
        j["rotation"] = {{"spin_z", render_pauli_sum(rot.spin_z)},
                         {"full_turn", render_pauli_sum(rot.full_turn)},
                         {"full_turn_is_minus_identity", rot.full_turn_is_minus_identity},
                         {"max_residual", rot.max_residual},
                         {"samples", rot.samples}};
    } else {
        j["rotation"] = nullptr;
    }
    return j;
}

ojson to_json(const TableReport& table) {
    ojson j;
    ojson entries = ojson::array();
    for (const auto& e : table.entries) {
        entries.push_back({{"operator", e.label},
                           {"expected", e.expected},
                           {"found", e.found},
                           {"matched", e.matched},
                           {"residual", e.residual}});
    }
    j["model"] = "dirac_2f_2p1";
    j["entries"] = std::move(entries);
    j["matched"] = table.matched_count();
    j["total"] = table.entries.size();
    return j;
}

ojson to_json(const PerturbationVerdict& v) {
    ojson j;
    j["term"] = v.term.to_string();
    j["pauli"] = v.term.string.to_string();
    j["coefficient"] = v.term.coefficient;
    j["monomial"] = v.term.monomial.to_string();
    j["degree"] = v.term.monomial.degree();
    ojson entries = ojson::array();
    for (const auto& e : v.entries) {
        entries.push_back({{"symmetry", symbol(e.kind)},
                           {"label", e.label},
                           {"setting", e.massless ? "massless" : "massive"},
                           {"representative", e.representative.to_string()},
                           {"verdict", e.preserves ? "preserves" : "breaks"}});
    }
    j["verdicts"] = std::move(entries);
    j["surviving"] = v.surviving;
    return j;
}

ojson to_json(const std::vector<PerturbationVerdict>& verdicts) {
    ojson arr = ojson::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v));
    return arr;
}

ojson spectrum_json(const HamiltonianModel& model, const std::vector<double>& p,
                    const std::vector<double>& eigenvalues) {
    return ojson{{"model", model.name()}, {"mass", model.mass()}, {"p", p}, {"eigenvalues", eigenvalues}};
}

std::string to_markdown(const HamiltonianModel& model, const SymmetrySolution& sol, double max_residual) {
    std::ostringstream os;
    os << header("Symmetry " + sol.query.to_string(), model);
    os << "- antiunitary: " << (sol.query.conjugate ? "yes" : "no") << "\n";
    os << "- exists: " << (sol.exists() ? "true" : "false") << "\n";
    os << "- nullity: " << sol.nullity << "\n";
    if (sol.exists()) {
        os << "- max residual: " << num(max_residual) << "\n\n";
        os << "| representative | square |\n|---|---|\n";
        for (const auto& r : sol.representatives)
            os << "| " << r.string.to_string() << " | " << to_string(r.square) << " |\n";
    }
    return os.str();
}

std::string to_markdown(const SymmetryReport& report) {
    std::ostringstream os;
    os << "# Symmetry audit: " << report.model << " (d = " << report.d << ", n = " << report.n
       << ", m = " << num(report.mass) << ")\n\n";
    os << "| symmetry | massive | massless |\n|---|---|---|\n";
    for (const auto& e : report.entries)
        os << "| " << symbol(e.kind) << " | " << representatives_text(e.massive) << " | "
           << representatives_text(e.massless) << " |\n";
    os << "\nAll representatives re-verified: " << (report.verified ? "yes" : "NO") << "\n";

    os << "\n## Operators\n\n| symmetry | setting | D+ | D- | D |\n|---|---|---|---|---|\n";
    for (const auto& op : report.operators) {
        auto cell = [](const std::optional<Representative>& r) {
            return r ? r->string.to_string() + " (" + to_string(r->square) + ")" : std::string("");
        };
        os << "| " << symbol(op.kind) << " | " << (op.count ? (op.massless ? "massless" : "massive") : "none")
           << " | " << cell(op.plus) << " | " << cell(op.minus) << " | " << cell(op.single) << " |\n";
    }

    os << "\n## Relations\n\n| relation | status | scalar | residual |\n|---|---|---|---|\n";
    for (const auto& r : report.relations) {
        os << "| " << r.name << " | " << to_string(r.status);
        if (r.status == RelationStatus::Skipped) {
            os << " (" << r.detail << ") |  |  |\n";
        } else {
            os << " | " << num(r.scalar.real()) << (r.scalar.imag() < 0 ? "-" : "+") << num(std::abs(r.scalar.imag()))
               << "i | " << num(r.residual) << " |\n";
        }
    }

    if (report.rotation) {
        const auto& rot = *report.rotation;
        os << "\n## Rotations\n\n";
        os << "- S_z = " << render_pauli_sum(rot.spin_z) << "\n";
        os << "- exp(2πi S_z) = " << render_pauli_sum(rot.full_turn)
           << (rot.full_turn_is_minus_identity ? " (= −1, double group)" : "") << "\n";
        os << "- finite-rotation residual over " << rot.samples << " samples: " << num(rot.max_residual) << "\n";
    }
    return os.str();
}

std::string to_markdown(const TableReport& table) {
    std::ostringstream os;
    os << "# Two-flavour (2+1)D operators: dirac_2f_2p1\n\n";
    os << "Pauli labels: the first letter acts in Dirac space (σ), the second in flavour space (τ).\n\n";
    const std::size_t rows[][2] = {{0, 6}, {6, 12}, {12, 16}};
    for (const auto& r : rows) {
        std::string head = "|", rule = "|", body = "|";
        for (std::size_t i = r[0]; i < r[1] && i < table.entries.size(); ++i) {
            const auto& e = table.entries[i];
            head += " " + e.label + " |";
            rule += "---|";
            body += " " + e.found + (e.matched ? " ✓" : " ✗ (expected " + e.expected + ")") + " |";
        }
        os << head << "\n" << rule << "\n" << body << "\n\n";
    }
    os << table.matched_count() << "/" << table.entries.size() << " entries matched\n";
    return os.str();
}

std::string to_markdown(const HamiltonianModel& model, const std::vector<PerturbationVerdict>& verdicts) {
    std::ostringstream os;
    os << header("Perturbations", model);
    os << "| term | preserves | breaks |\n|---|---|---|\n";
    for (const auto& v : verdicts) {
        std::string keep, broken;
        for (const auto& e : v.entries) {
            std::string& dst = e.preserves ? keep : broken;
            if (!dst.empty()) dst += ", ";
            dst += e.name();
        }
        os << "| " << v.term.to_string() << " | " << keep << " | " << broken << " |\n";
    }
    return os.str();
}

std::string spectrum_markdown(const HamiltonianModel& model, const std::vector<double>& p,
                              const std::vector<double>& eigenvalues) {
    std::ostringstream os;
    os << header("Spectrum", model);
    os << "p = (";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << num(p[i]);
    os << ")\n\n";
    for (double e : eigenvalues) os << "- " << num(e) << "\n";
    return os.str();
}

} // namespace dirsym
