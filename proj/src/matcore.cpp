#include "dirsym/matcore.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace dirsym {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    ComplexMatrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i)
        for (Eigen::Index j = 0; j < ac; ++j)
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol) {
    if (!(tol > 0.0)) throw Error("nullspace: tolerance must be positive");
    const Eigen::Index cols = m.cols();
    std::vector<ComplexVector> basis;
    if (cols == 0) return basis;

    if (m.rows() == 0 || max_abs(m) == 0.0) {
        for (Eigen::Index j = 0; j < cols; ++j)
            basis.push_back(ComplexVector::Unit(cols, j));
        return basis;
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;

    const ComplexMatrix& v = svd.matrixV();
    for (Eigen::Index j = rank; j < cols; ++j) basis.push_back(v.col(j));
    return basis;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m.adjoint() * m - identity(m.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

ComplexVector vectorize(const ComplexMatrix& m) {
    return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index n) {
    if (v.size() != n * n) throw Error("unvectorize: length is not n²");
    return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

std::optional<Complex> proportionality(const ComplexMatrix& a, const ComplexMatrix& b,
                                       double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    const double bb = b.squaredNorm();
    if (bb == 0.0) return std::nullopt;
    const Complex c = (b.adjoint() * a).trace() / bb;
    if (max_abs(a - c * b) > tol * std::max(1.0, max_abs(a))) return std::nullopt;
    return c;
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const auto& w = es.eigenvalues();
    ComplexVector phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i)
        phases(i) = std::polar(1.0, t * w(i));
    const ComplexMatrix& u = es.eigenvectors();
    return u * phases.asDiagonal() * u.adjoint();
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

} // namespace dirsym
