#include "dirsym/pauli.hpp"

#include <array>
#include <cctype>

namespace dirsym {

namespace {

const std::array<ComplexMatrix, 4>& pauli_table() {
    static const std::array<ComplexMatrix, 4> table = [] {
        using namespace std::complex_literals;
        std::array<ComplexMatrix, 4> t;
        for (auto& m : t) m = ComplexMatrix::Zero(2, 2);
        t[0] << 1.0, 0.0, 0.0, 1.0;
        t[1] << 0.0, 1.0, 1.0, 0.0;
        t[2] << 0.0, -1.0i, 1.0i, 0.0;
        t[3] << 1.0, 0.0, 0.0, -1.0;
        return t;
    }();
    return table;
}

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

// σ_a σ_b = i^k σ_c; returns (c, k).
std::pair<Pauli, int> multiply(Pauli a, Pauli b) {
    if (a == Pauli::I) return {b, 0};
    if (b == Pauli::I) return {a, 0};
    if (a == b) return {Pauli::I, 0};
    const int ia = static_cast<int>(a), ib = static_cast<int>(b);
    const auto c = static_cast<Pauli>(6 - ia - ib);
    // cyclic X→Y→Z gives +i
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {c, cyclic ? 1 : 3};
}

} // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

const ComplexMatrix& pauli_matrix(Pauli p) { return pauli_table()[static_cast<int>(p)]; }

PauliString::PauliString(std::vector<Pauli> factors, int phase_power)
    : factors_(std::move(factors)), phase_(((phase_power % 4) + 4) % 4) {}

PauliString PauliString::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    int power = 0;
    skip_space();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') power += 2;
        ++pos;
        skip_space();
    }
    if (pos < text.size() && text[pos] == 'i') {
        power += 1;
        ++pos;
        skip_space();
        if (text.substr(pos, 1) == "*") {
            ++pos;
        } else if (text.substr(pos, 2) == "\xC2\xB7") { // U+00B7 middle dot
            pos += 2;
        }
        skip_space();
    }
    std::vector<Pauli> factors;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        switch (c) {
        case 'I': case '0': factors.push_back(Pauli::I); break;
        case 'X': factors.push_back(Pauli::X); break;
        case 'Y': factors.push_back(Pauli::Y); break;
        case 'Z': factors.push_back(Pauli::Z); break;
        default:
            throw Error("invalid Pauli string '" + std::string(text) + "'");
        }
    }
    if (factors.empty()) throw Error("empty Pauli string '" + std::string(text) + "'");
    return PauliString(std::move(factors), power);
}

std::vector<PauliString> PauliString::all(int k) {
    if (k < 1 || k > 8) throw Error("PauliString::all: factor count out of range");
    std::vector<PauliString> out;
    const std::size_t count = std::size_t{1} << (2 * k);
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<Pauli> f(k);
        for (int j = 0; j < k; ++j)
            f[j] = static_cast<Pauli>((code >> (2 * (k - 1 - j))) & 3u);
        out.emplace_back(std::move(f));
    }
    return out;
}

Complex PauliString::phase() const { return i_power(phase_); }

PauliString PauliString::with_phase(int phase_power) const {
    return PauliString(factors_, phase_power);
}

std::string PauliString::label() const {
    std::string s;
    for (Pauli p : factors_) s.push_back(pauli_char(p));
    return s;
}

std::string PauliString::to_string() const {
    static constexpr const char* prefix[] = {"", "i\xC2\xB7", "-", "-i\xC2\xB7"};
    return prefix[phase_] + label();
}

ComplexMatrix PauliString::matrix() const {
    ComplexMatrix m = ComplexMatrix::Identity(1, 1) * phase();
    for (Pauli p : factors_) m = kron(m, pauli_matrix(p));
    return m;
}

int PauliString::count(Pauli p) const {
    int n = 0;
    for (Pauli f : factors_) n += (f == p);
    return n;
}

PauliString PauliString::operator*(const PauliString& other) const {
    if (other.factors_.size() != factors_.size())
        throw Error("Pauli string product: factor count mismatch");
    std::vector<Pauli> f(factors_.size());
    int power = phase_ + other.phase_;
    for (std::size_t j = 0; j < f.size(); ++j) {
        auto [c, k] = multiply(factors_[j], other.factors_[j]);
        f[j] = c;
        power += k;
    }
    return PauliString(std::move(f), power);
}

std::map<std::string, Complex> pauli_decompose(const ComplexMatrix& m, double drop_tol) {
    if (m.rows() != m.cols() || !is_power_of_two(m.rows()) || m.rows() < 2)
        throw Error("pauli_decompose: side length must be a power of two");
    int k = 0;
    while ((Eigen::Index{1} << k) < m.rows()) ++k;
    const double n = static_cast<double>(m.rows());
    const double floor = drop_tol * std::max(1.0, max_abs(m));
    std::map<std::string, Complex> out;
    for (const auto& p : PauliString::all(k)) {
        // Unit-phase Pauli strings are Hermitian, so P† = P.
        const Complex c = (p.matrix() * m).trace() / n;
        if (std::abs(c) > floor) out.emplace(p.label(), c);
    }
    return out;
}

std::optional<PauliString> as_pauli_string(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols() || !is_power_of_two(m.rows()) || m.rows() < 2) return std::nullopt;
    const auto coeffs = pauli_decompose(m, tol);
    if (coeffs.size() != 1) return std::nullopt;
    const auto& [label, c] = *coeffs.begin();
    for (int k = 0; k < 4; ++k)
        if (std::abs(c - i_power(k)) <= tol) return PauliString::parse(label).with_phase(k);
    return std::nullopt;
}

ComplexMatrix pauli_reconstruct(const std::map<std::string, Complex>& coefficients) {
    ComplexMatrix out;
    for (const auto& [label, c] : coefficients) {
        const ComplexMatrix term = c * PauliString::parse(label).matrix();
        if (out.size() == 0) out = term;
        else if (out.rows() != term.rows()) throw Error("pauli_reconstruct: mixed factor counts");
        else out += term;
    }
    return out;
}

} // namespace dirsym
