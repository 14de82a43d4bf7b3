// Points of C^n stored as 2n reals (x_k, y_k), z_k = x_k + i y_k.
// Real-coordinate storage is canonical; complex views are derived, so the
// finite-difference and quadrature code can mutate coordinates in place.
#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cma {

using complex = std::complex<double>;

class Point {
public:
    Point() = default;
    explicit Point(int n) : xy_(2 * static_cast<std::size_t>(n), 0.0) {
        if (n < 1) throw std::invalid_argument("Point: dimension must be >= 1");
    }
    Point(std::initializer_list<complex> zs) : xy_(2 * zs.size(), 0.0) {
        int k = 0;
        for (const auto& z : zs) { set_z(k++, z); }
    }

    static Point from_reals(std::vector<double> xy) {
        if (xy.empty() || xy.size() % 2 != 0)
            throw std::invalid_argument("Point: need an even, nonzero number of reals");
        Point p;
        p.xy_ = std::move(xy);
        return p;
    }

    int n() const { return static_cast<int>(xy_.size() / 2); }

    double& re(int k) { return xy_[2 * static_cast<std::size_t>(k)]; }
    double& im(int k) { return xy_[2 * static_cast<std::size_t>(k) + 1]; }
    double re(int k) const { return xy_[2 * static_cast<std::size_t>(k)]; }
    double im(int k) const { return xy_[2 * static_cast<std::size_t>(k) + 1]; }

    complex z(int k) const { return {re(k), im(k)}; }
    void set_z(int k, complex v) { re(k) = v.real(); im(k) = v.imag(); }

    double abs2(int k) const { return re(k) * re(k) + im(k) * im(k); }
    double abs(int k) const { return std::hypot(re(k), im(k)); }

    // |z'|^2 = sum_{k>=2} |z_k|^2 and |Re z'|^2, in the z' = (z_2,...,z_n) notation
    double zprime_abs2() const {
        double s = 0.0;
        for (int k = 1; k < n(); ++k) s += abs2(k);
        return s;
    }
    double re_zprime_abs2() const {
        double s = 0.0;
        for (int k = 1; k < n(); ++k) s += re(k) * re(k);
        return s;
    }

    double& coord(int i) { return xy_[static_cast<std::size_t>(i)]; }
    double coord(int i) const { return xy_[static_cast<std::size_t>(i)]; }
    int real_dim() const { return static_cast<int>(xy_.size()); }

    bool finite() const {
        for (double v : xy_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    const std::vector<double>& reals() const { return xy_; }

private:
    std::vector<double> xy_;
};

}  // namespace cma
