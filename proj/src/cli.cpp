#include "dirsym/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dirsym/classify.hpp"
#include "dirsym/model_io.hpp"
#include "dirsym/report.hpp"

namespace dirsym::cli {

namespace {

std::vector<double> parse_momentum(const std::string& text) {
    std::vector<double> p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw Error("invalid momentum component '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw Error("invalid momentum component '" + item + "'");
        p.push_back(v);
    }
    if (p.empty()) throw Error("empty momentum");
    return p;
}

HamiltonianModel load(const CliConfig& cfg) {
    HamiltonianModel model = resolve_model(cfg.model);
    if (cfg.mass) model = model.with_mass(*cfg.mass);
    return model;
}

void emit(std::ostream& out, const CliConfig& cfg, const ojson& j, const std::string& md) {
    if (cfg.format == "json") out << j.dump(2) << "\n";
    else out << md;
}

int cmd_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const HamiltonianModel model = load(cfg);
    const SymmetryQuery q = SymmetryQuery::make(kind_from_symbol(cfg.symmetry), model.dimension(), cfg.massless);
    const SymmetrySolution sol = solve(model, q, cfg.tol);
    double worst = 0.0;
    for (const auto& r : sol.representatives)
        worst = std::max(worst, max_invariance_residual(model, q, r.matrix(), cfg.seed));

    ojson j = to_json(sol);
    j["model"] = model.name();
    j["max_residual"] = worst;
    emit(out, cfg, j, to_markdown(model, sol, worst));
    if (worst > cfg.tol) {
        err << "verification failed: defining-equation residual " << worst << " exceeds " << cfg.tol << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_audit(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const HamiltonianModel model = load(cfg);
    AuditOptions opts;
    opts.seed = cfg.seed;
    opts.tol = cfg.tol;
    const SymmetryReport report = audit(model, opts);
    emit(out, cfg, to_json(report), to_markdown(report));

    int status = kExitOk;
    if (!report.verified) {
        double worst = 0.0;
        for (const auto& e : report.entries) worst = std::max(worst, e.max_residual);
        err << "verification failed: defining-equation residual " << worst << "\n";
        status = kExitMismatch;
    }
    for (const auto& r : report.relations) {
        if (r.status == RelationStatus::Failed) {
            err << "relation failed: " << r.name << " (residual " << r.residual << ")\n";
            status = kExitMismatch;
        }
    }
    return status;
}

int cmd_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    AuditOptions opts;
    opts.seed = cfg.seed;
    opts.tol = cfg.tol;
    const TableReport table = reproduce_operator_table(opts);
    emit(out, cfg, to_json(table), to_markdown(table));
    if (!table.ok()) {
        for (const auto& e : table.entries)
            if (!e.matched)
                err << "table mismatch: " << e.label << " expected " << e.expected << ", found " << e.found
                    << " (residual " << e.residual << ")\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_perturb(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const HamiltonianModel model = load(cfg);
    AuditOptions opts;
    opts.seed = cfg.seed;
    opts.tol = cfg.tol;
    const auto verdicts = enumerate_perturbations(model, cfg.max_degree, opts);
    emit(out, cfg, to_json(verdicts), to_markdown(model, verdicts));
    return kExitOk;
}

int cmd_spectrum(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const HamiltonianModel model = load(cfg);
    const std::vector<double> p = parse_momentum(cfg.momentum);
    const std::vector<double> e = spectrum(model, p);
    emit(out, cfg, spectrum_json(model, p, e), spectrum_markdown(model, p, e));
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Discrete-symmetry solver for momentum-polynomial Dirac Hamiltonians", "dirsym"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool with_model) {
        if (with_model)
            sub->add_option("model", cfg.model, "Zoo model (dirac_1p1, dirac_2p1, dirac_2f_2p1, dirac_3p1) or model JSON file")
                ->required();
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "markdown"}))
            ->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Residual and rank tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Seed for random-momentum verification")->capture_default_str();
        if (with_model)
            sub->add_option("--mass", cfg.mass, "Mass override")->check(CLI::NonNegativeNumber);
    };

    auto* audit_cmd = app.add_subcommand("audit", "Full symmetry report for a model");
    common(audit_cmd, true);

    auto* solve_cmd = app.add_subcommand("solve", "Solve one symmetry");
    common(solve_cmd, true);
    solve_cmd->add_option("--symmetry", cfg.symmetry, "P_x, P_y, P, T, C, M or chi")
        ->required()
        ->check(CLI::IsMember({"P_x", "P_y", "P", "T", "C", "M", "chi"}));
    solve_cmd->add_flag("--massless", cfg.massless, "Query the m = 0 Hamiltonian");

    auto* table_cmd = app.add_subcommand("table", "Reproduce the two-flavour (2+1)D operator table");
    common(table_cmd, false);

    auto* perturb_cmd = app.add_subcommand("perturb", "Classify all Pauli-string perturbations");
    common(perturb_cmd, true);
    perturb_cmd->add_option("--max-degree", cfg.max_degree, "Highest momentum degree (0 or 1)")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of H(p)");
    common(spectrum_cmd, true);
    spectrum_cmd->add_option("--p", cfg.momentum, "Momentum as comma-separated reals")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kExitUsage;
    }

    try {
        if (*audit_cmd) return cmd_audit(cfg, out, err);
        if (*solve_cmd) return cmd_solve(cfg, out, err);
        if (*table_cmd) return cmd_table(cfg, out, err);
        if (*perturb_cmd) return cmd_perturb(cfg, out, err);
        if (*spectrum_cmd) return cmd_spectrum(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace dirsym::cli
