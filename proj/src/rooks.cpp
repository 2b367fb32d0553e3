#include "eulerkind/rooks.hpp"

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/families.hpp"

namespace eulerkind {

Board3D::Board3D(unsigned m_) : m(m_) {
    for (unsigned z = 1; z <= m; ++z)
        for (unsigned x = 1; x <= z; ++x)
            for (unsigned y = 1; y <= z; ++y) cells.push_back({x, y, z});
}

namespace {

// Plain backtracking over cells in lexicographic order; desk scale needs no
// optimization.
void count_2d(const std::vector<std::array<unsigned, 2>>& cells, std::size_t start,
              unsigned remaining, unsigned rows_used, unsigned cols_used, Int& total) {
    if (remaining == 0) {
        ++total;
        return;
    }
    for (std::size_t i = start; i + remaining <= cells.size(); ++i) {
        const auto [r, c] = cells[i];
        if ((rows_used >> r) & 1u || (cols_used >> c) & 1u) continue;
        count_2d(cells, i + 1, remaining - 1, rows_used | (1u << r), cols_used | (1u << c), total);
    }
}

void count_3d(const std::vector<std::array<unsigned, 3>>& cells, std::size_t start,
              unsigned remaining, unsigned xs, unsigned ys, unsigned zs, Int& total) {
    if (remaining == 0) {
        ++total;
        return;
    }
    for (std::size_t i = start; i + remaining <= cells.size(); ++i) {
        const auto [x, y, z] = cells[i];
        if ((xs >> x) & 1u || (ys >> y) & 1u || (zs >> z) & 1u) continue;
        count_3d(cells, i + 1, remaining - 1, xs | (1u << x), ys | (1u << y), zs | (1u << z), total);
    }
}

} // namespace

Int rooks_2d(unsigned n, unsigned k) {
    if (k > n) throw KTooLargeError();
    std::vector<std::array<unsigned, 2>> cells;
    for (unsigned r = 1; r <= n; ++r)
        for (unsigned c = 1; c <= n; ++c) cells.push_back({r, c});
    Int total = 0;
    count_2d(cells, 0, k, 0, 0, total);
    return total;
}

Int rooks_3d_triangle(unsigned m, unsigned k) {
    if (k > m) throw KTooLargeError();
    const Board3D board(m);
    Int total = 0;
    count_3d(board.cells, 0, k, 0, 0, 0, total);
    return total;
}

ConjectureFit conjecture_fit(unsigned d, unsigned k_verify) {
    ConjectureFit fit;
    fit.d = d;
    const auto rhs_value = [d](unsigned k) {
        // B(d;k) 2^{d-k}, the polynomial side of the conjectured shape
        return big_B(d, k) * pow_signed(Rational(2), static_cast<long long>(d) - k);
    };

    const unsigned unknowns = d - 1;
    if (unknowns > 0) {
        // Solve sum_i x_i k^{d-i} = B(d;k) 2^{d-k} - k^d at k = 1..d-1.
        std::vector<std::vector<Rational>> mat(unknowns, std::vector<Rational>(unknowns + 1));
        for (unsigned r = 0; r < unknowns; ++r) {
            const unsigned k = r + 1;
            for (unsigned i = 1; i <= unknowns; ++i)
                mat[r][i - 1] = int_pow(Rational(Int(k)), d - i);
            mat[r][unknowns] = rhs_value(k) - int_pow(Rational(Int(k)), d);
        }
        // Gaussian elimination with exact pivoting.
        for (unsigned col = 0; col < unknowns; ++col) {
            unsigned pivot = col;
            while (pivot < unknowns && mat[pivot][col].is_zero()) ++pivot;
            if (pivot == unknowns) {
                fit.singular = true;
                return fit;
            }
            std::swap(mat[col], mat[pivot]);
            const Rational inv = mat[col][col].reciprocal();
            for (unsigned c = col; c <= unknowns; ++c) mat[col][c] *= inv;
            for (unsigned r = 0; r < unknowns; ++r) {
                if (r == col || mat[r][col].is_zero()) continue;
                const Rational f = mat[r][col];
                for (unsigned c = col; c <= unknowns; ++c) mat[r][c] -= f * mat[col][c];
            }
        }
        for (unsigned i = 0; i < unknowns; ++i) fit.coefficients.push_back(mat[i][unknowns]);
    }

    fit.all_integer = true;
    fit.all_positive = true;
    for (const auto& c : fit.coefficients) {
        if (!c.is_integer()) fit.all_integer = false;
        if (c.sign() <= 0) fit.all_positive = false;
    }

    fit.formula_verified = true;
    for (unsigned k = 0; k <= k_verify; ++k) {
        Rational poly = int_pow(Rational(Int(k)), d);
        for (unsigned i = 1; i <= unknowns; ++i)
            poly += fit.coefficients[i - 1] * int_pow(Rational(Int(k)), d - i);
        if (poly != rhs_value(k)) {
            fit.formula_verified = false;
            break;
        }
        fit.verified_up_to = k;
    }
    return fit;
}

} // namespace eulerkind
