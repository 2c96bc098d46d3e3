#include "dirsym/model_io.hpp"

#include <filesystem>
#include <fstream>

#include "dirsym/pauli.hpp"

namespace dirsym {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json& value, Eigen::Index n) {
    if (value.is_string()) {
        const PauliString p = PauliString::parse(value.get<std::string>());
        if (p.dimension() != n)
            throw Error("matrix '" + value.get<std::string>() + "' does not have side " + std::to_string(n));
        return p.matrix();
    }
    if (!value.is_array() || value.size() != static_cast<std::size_t>(n * n))
        throw Error("explicit matrix must list n² = " + std::to_string(n * n) + " [re, im] entries");
    ComplexMatrix m(n, n);
    for (Eigen::Index idx = 0; idx < n * n; ++idx) {
        const json& e = value[static_cast<std::size_t>(idx)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw Error("matrix entry " + std::to_string(idx) + " is not a [re, im] pair");
        m(idx / n, idx % n) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    return m;
}

HamiltonianModel model_from_json(const json& doc) {
    try {
        const std::string name = doc.value("name", std::string("custom"));
        const int d = doc.at("d").get<int>();
        const auto n = static_cast<Eigen::Index>(doc.at("n").get<int>());
        const double mass = doc.value("mass", 1.0);
        const int flavour = doc.value("flavour_factors", 0);

        std::vector<Term> terms;
        std::optional<ComplexMatrix> beta;
        for (const json& t : doc.at("terms")) {
            Monomial mono{t.at("exponents").get<std::vector<int>>()};
            if (static_cast<int>(mono.exponents.size()) != d)
                throw Error("term exponents must have length d = " + std::to_string(d));
            ComplexMatrix m = matrix_from_json(t.at("matrix"), n);
            if (mono.degree() == 0) {
                if (beta) throw Error("at most one degree-0 (mass) term is allowed");
                beta = std::move(m);
            } else {
                terms.push_back({std::move(mono), std::move(m)});
            }
        }
        return HamiltonianModel(name, d, std::move(terms), std::move(beta), mass, flavour);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed model document: ") + e.what());
    }
}

HamiltonianModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("model file '" + path + "' is not valid JSON: " + e.what());
    }
    return model_from_json(doc);
}

HamiltonianModel resolve_model(const std::string& source) {
    for (const auto& name : zoo_names())
        if (name == source) return zoo(name);
    if (std::filesystem::is_regular_file(source)) return load_model_file(source);
    return zoo(source); // throws with the list of valid names
}

} // namespace dirsym
