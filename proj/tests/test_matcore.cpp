#include <doctest.h>

#include <random>

#include "dirsym/matcore.hpp"
#include "dirsym/pauli.hpp"
#include "oracle.hpp"

using namespace dirsym;

namespace {

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

const Complex I1{0.0, 1.0};
const ComplexMatrix sx = m2(0, 1, 1, 0);
const ComplexMatrix sy = m2(0, -I1, I1, 0);
const ComplexMatrix sz = m2(1, 0, 0, -1);
const ComplexMatrix s0 = m2(1, 0, 0, 1);

} // namespace

TEST_CASE("kron of identities is the identity") {
    CHECK(kron(s0, s0) == identity(4));
}

TEST_CASE("kron(σ_x, τ_0) has identity blocks off the diagonal") {
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected.block(0, 2, 2, 2) = s0;
    expected.block(2, 0, 2, 2) = s0;
    CHECK(kron(sx, s0) == expected);
}

TEST_CASE("kron(σ_z, τ_z) is diag(1, -1, -1, 1)") {
    ComplexVector diag(4);
    diag << 1, -1, -1, 1;
    CHECK(kron(sz, sz) == ComplexMatrix(diag.asDiagonal()));
}

TEST_CASE("kron matches the index formula and Eigen's Kronecker product") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(rng, 2), b = oracle::random_matrix(rng, 4);
        const ComplexMatrix k = kron(a, b);
        REQUIRE(k.rows() == 8);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c) CHECK(k(i * 4 + r, j * 4 + c) == a(i, j) * b(r, c));
        const ComplexMatrix ref = Eigen::kroneckerProduct(a, b).eval();
        CHECK(k == ref);
    }
}

TEST_CASE("kron is associative on integer inputs") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> u(-3, 3);
    auto rnd = [&](int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Complex(u(rng), u(rng));
        return m;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = rnd(2), b = rnd(2), c = rnd(2);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("nullspace of a full-rank matrix is empty") {
    CHECK(nullspace(identity(4)).empty());
}

TEST_CASE("nullspace of the zero matrix is everything") {
    const auto basis = nullspace(ComplexMatrix::Zero(4, 4));
    CHECK(basis.size() == 4);
}

TEST_CASE("nullspace of X σ_z + σ_z X = 0, X σ_x − σ_x X = 0 is spanned by σ_x") {
    // vec(A X B) = (Bᵀ ⊗ A) vec(X)
    const ComplexMatrix I2 = identity(2);
    ComplexMatrix c(8, 4);
    c << kron(sz.transpose(), I2) + kron(I2, sz), kron(sx.transpose(), I2) - kron(I2, sx);
    const auto basis = nullspace(c);
    REQUIRE(basis.size() == 1);
    const ComplexMatrix x = unvectorize(basis[0], 2);
    const auto scale = proportionality(x, sx);
    REQUIRE(scale.has_value());
    CHECK(std::abs(std::abs(*scale) - 1.0 / std::sqrt(2.0)) < 1e-12);

    // Independent count: how many Pauli matrices satisfy both equations.
    int count = 0;
    for (char ch : std::string("IXYZ")) {
        const auto p = oracle::pauli(ch);
        if ((p * sz + sz * p).norm() < 1e-12 && (p * sx - sx * p).norm() < 1e-12) ++count;
    }
    CHECK(count == 1);
}

TEST_CASE("nullspace vectors are orthonormal and have small residual") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        // Rank-deficient 6x5 matrix: product of 6x3 and 3x5.
        const ComplexMatrix a = oracle::random_matrix(rng, 6).leftCols(3) *
                                oracle::random_matrix(rng, 5).topRows(3);
        const auto basis = nullspace(a);
        REQUIRE(basis.size() == 2);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK((a * basis[i]).norm() <= 1e-10 * a.norm());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Complex ip = basis[i].dot(basis[j]);
                CHECK(std::abs(ip - Complex(i == j ? 1.0 : 0.0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("vectorize is column-major and unvectorize inverts it") {
    ComplexMatrix m(2, 2);
    m << 1, 2, 3, 4;
    const ComplexVector v = vectorize(m);
    CHECK(v(0) == Complex(1));
    CHECK(v(1) == Complex(3));
    CHECK(v(2) == Complex(2));
    CHECK(unvectorize(v, 2) == m);
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(s0));
    CHECK_FALSE(is_unitary(2.0 * s0));
    CHECK(is_unitary(I1 * sy));
    std::mt19937_64 rng(4);
    CHECK(is_unitary(oracle::random_unitary(rng, 4)));
}

TEST_CASE("is_hermitian") {
    CHECK(is_hermitian(sy));
    CHECK_FALSE(is_hermitian(I1 * sy));
}

TEST_CASE("exp_i_hermitian matches a Taylor series") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix h = oracle::random_matrix(rng, 4);
        h = 0.25 * (h + h.adjoint()).eval();
        const double t = 0.7;
        ComplexMatrix series = identity(4), term = identity(4);
        for (int k = 1; k < 40; ++k) {
            term = (term * (I1 * t * h) / static_cast<double>(k)).eval();
            series += term;
        }
        CHECK(max_abs(exp_i_hermitian(h, t) - series) < 1e-12);
    }
}

TEST_CASE("pauli_decompose of single strings") {
    const auto x = pauli_decompose(sx);
    REQUIRE(x.size() == 1);
    CHECK(x.at("X") == Complex(1));

    ComplexVector diag(4);
    diag << 1, 1, -1, -1;
    const auto zi = pauli_decompose(ComplexMatrix(diag.asDiagonal()));
    REQUIRE(zi.size() == 1);
    CHECK(zi.at("ZI") == Complex(1));

    const auto beta = pauli_decompose(kron(sz, sz));
    REQUIRE(beta.size() == 1);
    CHECK(beta.at("ZZ") == Complex(1));
}

TEST_CASE("pauli_decompose rejects a non-power-of-two side") {
    CHECK_THROWS_AS(pauli_decompose(ComplexMatrix::Identity(3, 3)), Error);
}

TEST_CASE("pauli_decompose round-trips 1000 random matrices") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> side(1, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 << side(rng);
        const ComplexMatrix m = oracle::random_matrix(rng, n);
        const ComplexMatrix back = pauli_reconstruct(pauli_decompose(m, 0.0));
        REQUIRE(max_abs(back - m) <= 1e-12 * std::max(1.0, m.norm()));
    }
}

TEST_CASE("every Pauli string materialises to an exact unitary") {
    for (int k = 1; k <= 3; ++k) {
        for (const auto& p : PauliString::all(k)) {
            for (int ph = 0; ph < 4; ++ph) {
                const ComplexMatrix u = p.with_phase(ph).matrix();
                CHECK((u.adjoint() * u - identity(u.rows())).cwiseAbs().maxCoeff() == 0.0);
                const bool herm = (u - u.adjoint()).cwiseAbs().maxCoeff() == 0.0;
                const bool anti = (u + u.adjoint()).cwiseAbs().maxCoeff() == 0.0;
                CHECK(herm == (ph % 2 == 0));
                CHECK(anti == (ph % 2 == 1));
            }
        }
    }
}

TEST_CASE("Pauli strings agree with the Kronecker reference") {
    for (const auto& p : PauliString::all(3)) CHECK(p.matrix() == oracle::string_matrix(p.label()));
}

TEST_CASE("PauliString parsing and rendering") {
    CHECK(PauliString::parse("i·ZY").to_string() == "i·ZY");
    CHECK(PauliString::parse("i * ZY") == PauliString::parse("i·ZY"));
    CHECK(PauliString::parse("-i ZY").phase() == Complex(0, -1));
    CHECK(PauliString::parse("-XI").to_string() == "-XI");
    CHECK(PauliString::parse("+Z").to_string() == "Z");
    CHECK_THROWS_AS(PauliString::parse("XQ"), Error);
}

TEST_CASE("PauliString product tracks the phase") {
    const auto xy = PauliString::parse("X") * PauliString::parse("Y");
    CHECK(xy.to_string() == "i·Z");
    const auto a = PauliString::parse("i·XZ"), b = PauliString::parse("-YY");
    CHECK(max_abs((a * b).matrix() - a.matrix() * b.matrix()) == 0.0);
}

TEST_CASE("as_pauli_string recognises phased strings only") {
    const auto p = as_pauli_string(-I1 * kron(sy, sx));
    REQUIRE(p.has_value());
    CHECK(p->to_string() == "-i·YX");
    CHECK_FALSE(as_pauli_string((sx + sz) / std::sqrt(2.0)).has_value());
}
