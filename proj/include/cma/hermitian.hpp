// Hermitian matrices (upper triangle + real diagonal storage), determinants,
// and positive-semidefiniteness checks.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cma/point.hpp"

namespace cma {

// Hermitian by construction: only the upper triangle (incl. a real diagonal)
// is stored; (i,j) with i > j is served as the conjugate of (j,i).
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int n) : n_(n), up_(idx(n, n), complex{0.0, 0.0}) {
        if (n < 1) throw std::invalid_argument("HermitianMatrix: n must be >= 1");
    }

    static HermitianMatrix identity(int n) {
        HermitianMatrix h(n);
        for (int i = 0; i < n; ++i) h.set(i, i, 1.0);
        return h;
    }

    // (M + M^H)/2 of an arbitrary complex square matrix, row-major.
    static HermitianMatrix symmetrized(const std::vector<complex>& m, int n) {
        if (m.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("symmetrized: size mismatch");
        HermitianMatrix h(n);
        for (int i = 0; i < n; ++i) {
            h.set(i, i, 0.5 * (m[i * n + i] + std::conj(m[i * n + i])));
            for (int j = i + 1; j < n; ++j)
                h.set(i, j, 0.5 * (m[i * n + j] + std::conj(m[j * n + i])));
        }
        return h;
    }

    int n() const { return n_; }

    complex operator()(int i, int j) const {
        if (i == j) return up_[idx(i, i)];
        if (i < j) return up_[idx(i, j)];
        return std::conj(up_[idx(j, i)]);
    }

    // setter for the stored (upper) triangle; diagonal imaginary parts are dropped
    void set(int i, int j, complex v) {
        if (i > j) { set(j, i, std::conj(v)); return; }
        if (i == j) v = complex{v.real(), 0.0};
        up_[idx(i, j)] = v;
    }

    Eigen::MatrixXcd to_eigen() const {
        Eigen::MatrixXcd m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

private:
    // packed upper-triangle index, row-major: (i,j) with i <= j
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ - i * (i + 1) / 2 + j; }
    static std::size_t idx(int n, int) { return static_cast<std::size_t>(n) * (n + 1) / 2; }

    int n_ = 0;
    std::vector<complex> up_;
};

// det of a Hermitian matrix: real by construction. n <= 2 closed form,
// larger n via pivoted LU; imaginary residue above 1e-12 relative means a
// broken symmetrization upstream and is an error, not something to truncate.
inline double ma_det(const HermitianMatrix& h) {
    const int n = h.n();
    if (n == 1) return h(0, 0).real();
    if (n == 2) return h(0, 0).real() * h(1, 1).real() - std::norm(h(0, 1));
    const Eigen::MatrixXcd m = h.to_eigen();
    const complex d = Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
    const double scale = std::max(1.0, std::abs(d));
    if (std::abs(d.imag()) > 1e-12 * scale)
        throw std::runtime_error("ma_det: determinant has a non-real residue");
    return d.real();
}

struct PsdResult {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
};

// min eigenvalue via a Hermitian eigensolve; PSD up to -tol.
inline PsdResult psd_check(const HermitianMatrix& h, double tol) {
    if (tol < 0) throw std::invalid_argument("psd_check: tol must be >= 0");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_eigen(), Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    return {lo >= -tol, lo};
}

}  // namespace cma
