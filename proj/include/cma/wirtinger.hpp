// Finite-difference Wirtinger jets for arbitrary scalar fields on C^n.
//
// Conventions: d/dz = (d_x - i d_y)/2, so for a real field u
//   du/dz_k          = (u_{x_k} - i u_{y_k}) / 2
//   d2u/dz_i dzbar_j = [(u_{x_i x_j} + u_{y_i y_j}) + i (u_{x_i y_j} - u_{y_i x_j})] / 4
// assembled from real central differences and symmetrized to exact Hermitian.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cma/jet.hpp"
#include "cma/point.hpp"

namespace cma {

using Field = std::function<double(const Point&)>;

struct FdScheme {
    double h = 1e-5;
    int order = 2;           // 2 or 4 (4 = Richardson over the order-2 stencil)
    bool richardson = true;  // extrapolate over h and h/2

    static FdScheme with_step(double h, bool richardson = true) {
        FdScheme s;
        s.h = h;
        s.richardson = richardson;
        return s;
    }
};

// default step near a singular set: h = max(1e-5, 1e-3 * distance), which
// balances truncation against cancellation in the log-type fields here
inline FdScheme default_scheme(double dist_to_singular) {
    double d = std::isfinite(dist_to_singular) ? dist_to_singular : 1.0;
    return FdScheme::with_step(std::max(1e-5, 1e-3 * d));
}

namespace detail {

inline double sample(const Field& f, Point& p, int i, double di, int j, double dj) {
    const double oi = p.coord(i);
    p.coord(i) = oi + di;
    double oj = 0.0;
    if (j >= 0) {
        oj = p.coord(j);
        p.coord(j) = oj + dj;
    }
    const double v = f(p);
    p.coord(i) = oi;
    if (j >= 0) p.coord(j) = oj;
    if (!std::isfinite(v)) throw std::domain_error("fd: non-finite field value on stencil");
    return v;
}

// order-2 central first and second differences on the real coordinates
struct RealDerivs {
    double value = 0.0;
    std::vector<double> grad;   // size 2n
    std::vector<double> hess;   // (2n)^2 row-major, symmetric
};

inline RealDerivs real_derivs_order2(const Field& f, const Point& z, double h) {
    const int d = z.real_dim();
    Point p = z;
    RealDerivs out;
    out.value = f(p);
    if (!std::isfinite(out.value)) throw std::domain_error("fd: non-finite field value at base point");
    out.grad.assign(d, 0.0);
    out.hess.assign(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        const double fp = sample(f, p, i, h, -1, 0);
        const double fm = sample(f, p, i, -h, -1, 0);
        out.grad[i] = (fp - fm) / (2 * h);
        out.hess[i * d + i] = (fp - 2 * out.value + fm) / (h * h);
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const double fpp = sample(f, p, i, h, j, h);
            const double fpm = sample(f, p, i, h, j, -h);
            const double fmp = sample(f, p, i, -h, j, h);
            const double fmm = sample(f, p, i, -h, j, -h);
            const double m = (fpp - fpm - fmp + fmm) / (4 * h * h);
            out.hess[i * d + j] = m;
            out.hess[j * d + i] = m;
        }
    }
    return out;
}

inline RealDerivs richardson2(const RealDerivs& ch, const RealDerivs& ch2) {
    // order-2 base scheme: R = (4 A(h/2) - A(h)) / 3
    RealDerivs out = ch2;
    for (std::size_t i = 0; i < out.grad.size(); ++i)
        out.grad[i] = (4 * ch2.grad[i] - ch.grad[i]) / 3;
    for (std::size_t i = 0; i < out.hess.size(); ++i)
        out.hess[i] = (4 * ch2.hess[i] - ch.hess[i]) / 3;
    return out;
}

inline RealDerivs real_derivs(const Field& f, const Point& z, const FdScheme& sc) {
    if (sc.h <= 0) throw std::invalid_argument("fd: step must be positive");
    if (sc.order != 2 && sc.order != 4) throw std::invalid_argument("fd: order must be 2 or 4");
    RealDerivs a = real_derivs_order2(f, z, sc.h);
    if (sc.order == 2 && !sc.richardson) return a;
    RealDerivs b = real_derivs_order2(f, z, sc.h / 2);
    return richardson2(a, b);
}

}  // namespace detail

// full real Hessian (2n x 2n, row-major); the probes integrate its Frobenius norm
inline std::vector<double> fd_real_hessian(const Field& f, const Point& z, const FdScheme& sc) {
    return detail::real_derivs(f, z, sc).hess;
}

inline double frobenius_norm(const std::vector<double>& m) {
    double s = 0.0;
    for (double v : m) s += v * v;
    return std::sqrt(s);
}

inline Jet fd_jet(const Field& f, const Point& z, const FdScheme& sc) {
    const detail::RealDerivs rd = detail::real_derivs(f, z, sc);
    const int n = z.n(), d = 2 * n;
    Jet jet;
    jet.value = rd.value;
    jet.grad.resize(n);
    for (int k = 0; k < n; ++k)
        jet.grad[k] = complex{rd.grad[2 * k], -rd.grad[2 * k + 1]} * 0.5;
    std::vector<complex> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = rd.hess[(2 * i) * d + (2 * j)] + rd.hess[(2 * i + 1) * d + (2 * j + 1)];
            const double im = rd.hess[(2 * i) * d + (2 * j + 1)] - rd.hess[(2 * i + 1) * d + (2 * j)];
            m[i * n + j] = complex{re, im} * 0.25;
        }
    }
    jet.hess = HermitianMatrix::symmetrized(m, n);
    return jet;
}

// density of (dd^c u)^n against standard volume: 4^n n! det(dd-bar u)
inline double ma_measure_density(const Field& f, const Point& z, const FdScheme& sc) {
    const int n = z.n();
    double c = 1.0;
    for (int k = 1; k <= n; ++k) c *= 4.0 * k;
    return c * ma_det(fd_jet(f, z, sc).hess);
}

}  // namespace cma
