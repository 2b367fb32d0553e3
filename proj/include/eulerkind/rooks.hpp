#pragma once

#include <array>
#include <vector>

#include "eulerkind/rational.hpp"

namespace eulerkind {

/// Size-m triangle board in three dimensions:
/// cells {(x,y,z) : 1 <= x <= z, 1 <= y <= z, 1 <= z <= m}, so the layer at
/// height z is a z-by-z square and |cells| = m(m+1)(2m+1)/6.
struct Board3D {
    unsigned m;
    std::vector<std::array<unsigned, 3>> cells;
    explicit Board3D(unsigned m);
};

/// Exhaustive count of k-subsets of the n-by-n board with pairwise distinct
/// rows and columns. Equals C(n,k)^2 k!.
Int rooks_2d(unsigned n, unsigned k);

/// Exhaustive count of k-subsets of Board3D(m) with pairwise distinct x, y
/// and z coordinates. Equals central_T(m+1, m+1-k).
Int rooks_3d_triangle(unsigned m, unsigned k);

/// Fit of B(d;k) = (k^d + x_1 k^{d-1} + ... + x_{d-1} k) 2^{k-d}: solves the
/// d-1 coefficients exactly from k = 1..d-1, then verifies against big_B.
struct ConjectureFit {
    unsigned d = 0;
    std::vector<Rational> coefficients; // x_1..x_{d-1}
    unsigned verified_up_to = 0;        // largest k checked
    bool formula_verified = false;      // fit reproduces big_B(d,k) for all k <= verified_up_to
    bool all_integer = false;
    bool all_positive = false;          // the full conjectured claim; false from d = 3 on
    bool singular = false;              // conjectured shape unsatisfiable (reported, not fatal)
};

ConjectureFit conjecture_fit(unsigned d, unsigned k_verify = 30);

} // namespace eulerkind
