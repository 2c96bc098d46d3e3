#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dirsym/matcore.hpp"

namespace dirsym {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
const ComplexMatrix& pauli_matrix(Pauli p);

/// Phase · (P_1 ⊗ P_2 ⊗ … ⊗ P_k), phase ∈ {1, i, −1, −i}.
///
/// The leftmost factor acts in Dirac space and the rightmost in flavour
/// space. Factors are materialised with `kron`, so the leftmost factor is
/// the outermost block index.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> factors, int phase_power = 0);

    /// Parses "ZY", "i·ZY", "i * ZY", "-i ZY", "-XI", "+Z".
    static PauliString parse(std::string_view text);

    /// All 4^k unit-phase strings of k factors, lexicographic in I < X < Y < Z.
    static std::vector<PauliString> all(int k);

    const std::vector<Pauli>& factors() const { return factors_; }
    int size() const { return static_cast<int>(factors_.size()); }
    Eigen::Index dimension() const { return Eigen::Index{1} << factors_.size(); }

    /// Power of i in {0, 1, 2, 3}.
    int phase_power() const { return phase_; }
    Complex phase() const;
    PauliString with_phase(int phase_power) const;

    /// Factor letters only, e.g. "ZY".
    std::string label() const;
    /// Phase and letters, e.g. "i·ZY", "-XI", "YY".
    std::string to_string() const;

    ComplexMatrix matrix() const;

    bool is_hermitian() const { return phase_ % 2 == 0; }
    int count(Pauli p) const;

    PauliString operator*(const PauliString& other) const;

    /// Ordering and equality ignore nothing: label first, then phase.
    friend auto operator<=>(const PauliString& a, const PauliString& b) {
        if (auto c = a.factors_ <=> b.factors_; c != 0) return c;
        return a.phase_ <=> b.phase_;
    }
    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    std::vector<Pauli> factors_;
    int phase_ = 0;
};

/// Coefficients c_P = tr(P† m)/n over unit-phase Pauli strings, keyed by
/// label (so iteration is lexicographic). Coefficients with modulus at or
/// below drop_tol·max(1, ‖m‖_max) are omitted.
std::map<std::string, Complex> pauli_decompose(const ComplexMatrix& m,
                                               double drop_tol = 1e-12);

/// The phased Pauli string equal to m, if m is one (phase in {±1, ±i}).
std::optional<PauliString> as_pauli_string(const ComplexMatrix& m, double tol = kDefaultTol);

/// Inverse of pauli_decompose.
ComplexMatrix pauli_reconstruct(const std::map<std::string, Complex>& coefficients);

} // namespace dirsym
