#ifndef WSF_MATRIX_HPP
#define WSF_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "fp.hpp"
#include "ratfunc.hpp"

namespace wsf {

template <class S>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<S> a;

    Mat() = default;
    Mat(int r, int c, const S& fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

    S& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
        Mat r(x.rows, y.cols, x.a.empty() ? S() : x.a[0] - x.a[0]);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k)
                for (int j = 0; j < y.cols; ++j)
                    r(i, j) += x(i, k) * y(k, j);
        return r;
    }
};

using RFMatrix = Mat<RatFunc>;

// Determinant by fraction-free Bareiss elimination with exact polynomial
// division. Row denominators are cleared first so all pivoting happens over
// Laurent polynomials.
inline RatFunc rf_det(const RFMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return RatFunc::one(0);
    const int arity = m.a[0].arity();
    RatFunc scale = RatFunc::one(arity);

    std::vector<std::vector<LaurentPoly>> w(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) {
        LaurentPoly rowden = LaurentPoly::constant(arity, 1);
        for (int j = 0; j < n; ++j) rowden = rowden * m(i, j).den();
        scale = scale / RatFunc(rowden);
        for (int j = 0; j < n; ++j) {
            w[i][j] = m(i, j).num() * (*try_divide(rowden, m(i, j).den()));
        }
    }

    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(arity, 1);
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        size_t best = 0;
        for (int i = k; i < n; ++i) {
            if (!w[i][k].is_zero() && (piv == -1 || w[i][k].term_count() < best)) {
                piv = i;
                best = w[i][k].term_count();
            }
        }
        if (piv == -1) return RatFunc::zero(arity);
        if (piv != k) {
            std::swap(w[piv], w[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                auto q = try_divide(t, prev);
                if (!q) throw std::logic_error("Bareiss exact division failed");
                w[i][j] = *q;
            }
            w[i][k] = LaurentPoly::zero(arity);
        }
        prev = w[k][k];
    }
    RatFunc det = RatFunc(w[n - 1][n - 1]) * scale;
    return sign < 0 ? -det : det;
}

// Field determinant by Gaussian elimination (used on modular evaluations).
inline Fp det(Mat<Fp> m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    Fp d(1);
    for (int k = 0; k < m.rows; ++k) {
        int piv = -1;
        for (int i = k; i < m.rows; ++i)
            if (!m(i, k).is_zero()) { piv = i; break; }
        if (piv == -1) return Fp(0);
        if (piv != k) {
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(k, j));
            d = -d;
        }
        d *= m(k, k);
        Fp inv = m(k, k).inverse();
        for (int i = k + 1; i < m.rows; ++i) {
            Fp f = m(i, k) * inv;
            if (f.is_zero()) continue;
            for (int j = k; j < m.cols; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

} // namespace wsf

#endif
