#include <doctest.h>

#include <numbers>
#include <random>
#include <set>

#include "dirsym/symsolve.hpp"
#include "oracle.hpp"

using namespace dirsym;

namespace {

const Complex I1{0.0, 1.0};

ComplexMatrix P(const char* s) { return PauliString::parse(s).matrix(); }

SymmetrySolution run(const std::string& model, const std::string& sym, bool massless, double mass = 1.0) {
    const auto m = zoo(model, mass);
    return solve(m, SymmetryQuery::make(kind_from_symbol(sym), m.dimension(), massless));
}

std::vector<std::string> rendered(const SymmetrySolution& s) {
    std::vector<std::string> out;
    for (const auto& r : s.representatives) out.push_back(r.string.to_string());
    return out;
}

std::set<std::string> labels(const SymmetrySolution& s) {
    std::set<std::string> out;
    for (const auto& r : s.representatives) out.insert(r.string.label());
    return out;
}

bool proportional_to(const ComplexMatrix& a, const ComplexMatrix& b) {
    const auto c = proportionality(a, b);
    return c && std::abs(std::abs(*c) - 1.0) < 1e-10;
}

const ConstraintBlock& block_for(const ConstraintSystem& cs, const Monomial& m) {
    for (const auto& b : cs.blocks)
        if (b.monomial == m) return b;
    throw std::runtime_error("missing block");
}

} // namespace

TEST_CASE("query invariants") {
    for (int d : {1, 2, 3}) {
        for (SymmetryKind k : symmetry_kinds(d)) {
            const auto q = SymmetryQuery::make(k, d);
            CHECK(q.conjugate == (k == SymmetryKind::TimeReversal || k == SymmetryKind::ParticleHole));
            const bool negative = k == SymmetryKind::ParticleHole || k == SymmetryKind::EnergyReflection;
            CHECK(q.energy_sign == (negative ? -1 : 1));
            CHECK((q.momentum_map * q.momentum_map.transpose() - RealMatrix::Identity(d, d)).norm() == 0.0);
        }
    }
    CHECK_THROWS_AS(SymmetryQuery::make(SymmetryKind::ParityX, 3), Error);
    CHECK_THROWS_AS(SymmetryQuery::make(SymmetryKind::Parity, 2), Error);
    CHECK_THROWS_AS(kind_from_symbol("Q"), Error);
}

TEST_CASE("time-reversal constraints of the massless (2+1)D model") {
    const auto m = zoo("dirac_2p1");
    const auto cs = build_constraints(m, SymmetryQuery::make(SymmetryKind::TimeReversal, 2, true));
    REQUIRE(cs.blocks.size() == 2);
    // D σ_x* = −σ_x D and D σ_y* = −σ_y D.
    const auto& bx = block_for(cs, Monomial::linear(2, 0));
    CHECK(bx.lhs == P("X").conjugate());
    CHECK(bx.rhs == -P("X"));
    const auto& by = block_for(cs, Monomial::linear(2, 1));
    CHECK(by.lhs == P("Y").conjugate());
    CHECK(by.rhs == -P("Y"));
    CHECK(by.lhs == by.rhs);  // i.e. D σ_y = σ_y D
}

TEST_CASE("time-reversal constraints gain the mass block when massive") {
    const auto m = zoo("dirac_2p1");
    const auto cs = build_constraints(m, SymmetryQuery::make(SymmetryKind::TimeReversal, 2, false));
    REQUIRE(cs.blocks.size() == 3);
    const auto& b0 = block_for(cs, Monomial::constant(2));
    CHECK(b0.lhs == P("Z"));
    CHECK(b0.rhs == P("Z"));
}

TEST_CASE("full parity constraints of the (1+1)D model") {
    const auto m = zoo("dirac_1p1");
    const auto cs = build_constraints(m, SymmetryQuery::make(SymmetryKind::Parity, 1, false));
    REQUIRE(cs.blocks.size() == 2);
    CHECK(block_for(cs, Monomial::linear(1, 0)).rhs == -P("X"));
    CHECK(block_for(cs, Monomial::constant(1)).rhs == P("Z"));
}

TEST_CASE("block count equals the number of monomials") {
    for (const auto& name : zoo_names()) {
        const auto m = zoo(name);
        for (SymmetryKind k : symmetry_kinds(m.dimension())) {
            if (k == SymmetryKind::Chirality) continue;
            CHECK(build_constraints(m, SymmetryQuery::make(k, m.dimension(), true)).blocks.size() ==
                  static_cast<std::size_t>(m.dimension()));
            CHECK(build_constraints(m, SymmetryQuery::make(k, m.dimension(), false)).blocks.size() ==
                  static_cast<std::size_t>(m.dimension() + 1));
        }
    }
}

TEST_CASE("massless time reversal of the (2+1)D model is iσ_y with θ² = −1") {
    const auto s = run("dirac_2p1", "T", true);
    CHECK(s.nullity == 1);
    REQUIRE(s.representatives.size() == 1);
    CHECK(s.representatives[0].string.to_string() == "i·Y");
    CHECK(s.representatives[0].square == SquareSign::Minus);
    CHECK(max_abs(s.representatives[0].matrix() - I1 * P("Y")) == 0.0);
}

TEST_CASE("massive time reversal of the (2+1)D model does not exist") {
    const auto s = run("dirac_2p1", "T", false);
    CHECK(s.nullity == 0);
    CHECK_FALSE(s.exists());
}

TEST_CASE("no chirality in the single-flavour (2+1)D model") {
    CHECK_FALSE(run("dirac_2p1", "chi", true).exists());
    CHECK_FALSE(run("dirac_2p1", "chi", false).exists());
}

TEST_CASE("single-flavour (2+1)D particle-hole and energy reflection") {
    const auto c = run("dirac_2p1", "C", false);
    REQUIRE(c.representatives.size() == 1);
    CHECK(c.representatives[0].string.to_string() == "X");
    CHECK(c.representatives[0].square == SquareSign::Plus);

    const auto mm = run("dirac_2p1", "M", true);
    REQUIRE(mm.representatives.size() == 1);
    CHECK(mm.representatives[0].string.to_string() == "Z");
    CHECK(mm.representatives[0].square == SquareSign::Plus);

    CHECK(rendered(run("dirac_2p1", "P_x", true)) == std::vector<std::string>{"X"});
    CHECK(rendered(run("dirac_2p1", "P_y", true)) == std::vector<std::string>{"Y"});
}

TEST_CASE("two-flavour time reversal has two inequivalent representatives") {
    const auto s = run("dirac_2f_2p1", "T", false);
    CHECK(s.nullity == 2);
    REQUIRE(s.representatives.size() == 2);
    CHECK(s.representatives[0].string.label() == "YY");
    CHECK(s.representatives[0].square == SquareSign::Plus);
    CHECK(s.representatives[1].string.label() == "YX");
    CHECK(s.representatives[1].square == SquareSign::Minus);
    CHECK(proportional_to(s.representatives[1].matrix(), -I1 * P("YX")));
}

TEST_CASE("(1+1)D operators") {
    auto one = [](const char* sym) {
        const auto s = run("dirac_1p1", sym, false);
        REQUIRE(s.representatives.size() == 1);
        return s.representatives[0];
    };
    const std::vector<std::pair<const char*, const char*>> expected{
        {"P", "Z"}, {"T", "Z"}, {"C", "X"}, {"M", "Y"}, {"chi", "X"}};
    for (const auto& [sym, label] : expected) {
        const auto r = one(sym);
        CHECK(r.string.label() == label);
        CHECK(r.square == SquareSign::Plus);
    }
    // D(M) = −iσ_y up to phase.
    CHECK(proportional_to(one("M").matrix(), -I1 * P("Y")));
}

TEST_CASE("(3+1)D time reversal is i·v_x·v_z up to phase with D·D̄ = −1") {
    const auto m = zoo("dirac_3p1");
    const auto s = run("dirac_3p1", "T", false);
    REQUIRE(s.representatives.size() == 1);
    CHECK(s.representatives[0].square == SquareSign::Minus);
    CHECK(proportional_to(s.representatives[0].matrix(), I1 * *m.velocity(0) * *m.velocity(2)));
}

TEST_CASE("(3+1)D parity, particle-hole and chirality") {
    const auto m = zoo("dirac_3p1");
    const ComplexMatrix beta = *m.mass_matrix();
    const auto p = run("dirac_3p1", "P", false);
    REQUIRE(p.representatives.size() == 1);
    CHECK(proportional_to(p.representatives[0].matrix(), beta));

    // iγ² = i β v_y
    const auto c = run("dirac_3p1", "C", false);
    REQUIRE(c.representatives.size() == 1);
    CHECK(c.representatives[0].square == SquareSign::Plus);
    CHECK(proportional_to(c.representatives[0].matrix(), I1 * beta * *m.velocity(1)));

    // γ⁵ = i γ⁰γ¹γ²γ³ = i v_x v_y v_z up to phase.
    const auto chi = run("dirac_3p1", "chi", false);
    REQUIRE(chi.representatives.size() == 1);
    CHECK(proportional_to(chi.representatives[0].matrix(), *m.velocity(0) * *m.velocity(1) * *m.velocity(2)));
}

TEST_CASE("two-flavour pairs follow the operator table up to phase") {
    const std::vector<std::pair<const char*, std::set<std::string>>> expected{
        {"P_x", {"XX", "XY"}}, {"P_y", {"YX", "YY"}}, {"M", {"ZX", "ZY"}}, {"chi", {"IX", "IY"}},
        {"T", {"YY", "YX"}},   {"C", {"XZ", "XI"}}};
    for (const auto& [sym, want] : expected) {
        const auto s = run("dirac_2f_2p1", sym, false);
        CHECK(s.nullity == 2);
        CHECK(labels(s) == want);
    }
    // Unitary pairs carry square signs + and − under the canonical phase.
    for (const char* sym : {"P_x", "P_y", "M", "chi"}) {
        const auto s = run("dirac_2f_2p1", sym, false);
        REQUIRE(s.representatives.size() == 2);
        CHECK(s.representatives[0].square == SquareSign::Plus);
        CHECK(s.representatives[1].square == SquareSign::Minus);
    }
    const auto c = run("dirac_2f_2p1", "C", false);
    for (const auto& r : c.representatives) CHECK(r.square == SquareSign::Plus);
}

TEST_CASE("classify_square") {
    CHECK(classify_square(I1 * P("Y"), true) == SquareSign::Minus);
    CHECK(classify_square(P("X"), true) == SquareSign::Plus);
    CHECK(classify_square((P("X") + P("Z")) / std::sqrt(2.0), false) == SquareSign::Plus);
    CHECK(classify_square(I1 * P("Z"), false) == SquareSign::Minus);
    // A π/2 rotation squares to a non-scalar.
    const ComplexMatrix r = (identity(2) + I1 * P("Z")) / std::sqrt(2.0);
    CHECK(classify_square(r, false) == SquareSign::NonScalar);
    CHECK_THROWS_AS(classify_square(2.0 * P("X"), false), Error);
}

TEST_CASE("antiunitary square signs do not depend on the phase") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (const char* d : {"i·Y", "X", "YY", "i·YX", "i·IY", "YY"}) {
        const ComplexMatrix m = P(d);
        const SquareSign ref = classify_square(m, true);
        for (int i = 0; i < 20; ++i) CHECK(classify_square(std::polar(1.0, angle(rng)) * m, true) == ref);
    }
}

TEST_CASE("nonexistence is stable under the mass value") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> mass(0.05, 5.0);
    for (int i = 0; i < 20; ++i) {
        const double m = mass(rng);
        for (const char* sym : {"P_x", "P_y", "T", "M"}) CHECK_FALSE(run("dirac_2p1", sym, false, m).exists());
        CHECK_FALSE(run("dirac_2p1", "chi", true, m).exists());
    }
}

TEST_CASE("every representative satisfies its defining equation at 50 random momenta") {
    std::mt19937_64 rng(23);
    for (const auto& name : zoo_names()) {
        const auto m = zoo(name, 0.8);
        for (SymmetryKind k : symmetry_kinds(m.dimension())) {
            for (bool massless : {false, true}) {
                const auto q = SymmetryQuery::make(k, m.dimension(), massless);
                for (const auto& r : solve(m, q).representatives) {
                    CHECK(is_unitary(r.matrix()));
                    for (int s = 0; s < 50; ++s) {
                        const auto p = oracle::random_momentum(rng, m.dimension());
                        CHECK(invariance_residual(m, q, r.matrix(), p) <= 1e-10);
                    }
                }
            }
        }
    }
}

TEST_CASE("representatives coincide with the brute-force oracle") {
    for (const auto& name : oracle::model_names()) {
        const auto m = zoo(name);
        const auto om = oracle::dirac(name);
        for (const auto& sym : oracle::symbols(m.dimension())) {
            for (bool massless : {false, true}) {
                CAPTURE(name);
                CAPTURE(sym);
                CAPTURE(massless);
                const auto s = solve(m, SymmetryQuery::make(kind_from_symbol(sym), m.dimension(), massless));
                const auto want = oracle::solutions(om, sym, massless);
                CHECK(labels(s) == want);
                // The oracle's strings are linearly independent, so their
                // count is the dimension of the solution space they span.
                CHECK(s.nullity == static_cast<int>(want.size()));
                if (oracle::antiunitary(sym)) {
                    for (const auto& r : s.representatives) {
                        const int sign = oracle::antiunitary_square(r.string.label());
                        CHECK(sign == (r.square == SquareSign::Plus ? 1 : -1));
                    }
                }
            }
        }
    }
}

TEST_CASE("canonical phase") {
    CHECK(canonical_phase(PauliString::parse("Y"), true, 0).to_string() == "i·Y");
    CHECK(canonical_phase(PauliString::parse("YY"), true, 1).to_string() == "YY");
    CHECK(canonical_phase(PauliString::parse("Y"), false, 0).to_string() == "Y");
    CHECK(canonical_phase(PauliString::parse("ZY"), false, 1).to_string() == "i·ZY");
    CHECK(canonical_phase(PauliString::parse("YX"), false, 1).to_string() == "YX");
}

TEST_CASE("massless (2+1)D energy-reflection relation") {
    const auto rel = relation_check(zoo("dirac_2p1"));
    REQUIRE_FALSE(rel.empty());
    CHECK(rel[0].status == RelationStatus::Verified);
    CHECK(std::abs(std::abs(rel[0].scalar) - 1.0) < 1e-12);
    // σ_x (iσ_y)* = σ_x (−iσ_y) = −σ_z
    CHECK(max_abs(P("X") * (I1 * P("Y")).conjugate() + P("Z")) == 0.0);
}

TEST_CASE("two-flavour relations and the flavour product identity") {
    const auto rel = relation_check(zoo("dirac_2f_2p1"));
    int products = 0;
    for (const auto& r : rel) {
        CAPTURE(r.name);
        CHECK(r.status == RelationStatus::Verified);
        CHECK(r.residual <= 1e-10);
        if (r.name.find("1⊗τ_z") != std::string::npos) ++products;
    }
    CHECK(products == 6);

    // Independent check of D₊(S)·D₋(S) ∝ σ_0⊗τ_z.
    const auto m = zoo("dirac_2f_2p1");
    for (const auto& op : labelled_operators(m)) {
        REQUIRE(op.is_pair());
        CHECK(proportional_to(op.plus->matrix() * op.minus->matrix(), P("IZ")));
    }
}

TEST_CASE("(3+1)D relation D(M) ∝ D(C)·D(T)*") {
    const auto m = zoo("dirac_3p1");
    const ComplexMatrix beta = *m.mass_matrix();
    const ComplexMatrix dc = I1 * beta * *m.velocity(1);
    const ComplexMatrix dt = I1 * *m.velocity(0) * *m.velocity(2);
    const auto dm = run("dirac_3p1", "M", false);
    REQUIRE(dm.representatives.size() == 1);
    CHECK(proportional_to(dm.representatives[0].matrix(), dc * dt.conjugate()));

    for (const auto& r : relation_check(m)) {
        CAPTURE(r.name);
        CHECK(r.status == RelationStatus::Verified);
    }
}

TEST_CASE("relation_check skips what is missing") {
    const auto rel = relation_check(zoo("dirac_2p1"));
    bool skipped = false;
    for (const auto& r : rel)
        if (r.status == RelationStatus::Skipped) skipped = true;
    CHECK(skipped);
}
