// Second-order Wirtinger data of a real scalar field at a point.
#pragma once

#include <vector>

#include "cma/hermitian.hpp"
#include "cma/point.hpp"

namespace cma {

// value, Wirtinger gradient du/dz_k, and complex Hessian d^2u/dz_i dzbar_j.
struct Jet {
    double value = 0.0;
    std::vector<complex> grad;
    HermitianMatrix hess;

    int n() const { return hess.n(); }
};

}  // namespace cma
