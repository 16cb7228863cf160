#ifndef WSF_MODCHAR_HPP
#define WSF_MODCHAR_HPP

#include <stdexcept>
#include <vector>

#include "cases.hpp"
#include "roots.hpp"

namespace wsf {

// Modular characters evaluated at cocharacters, as integer powers of
// v = q_F^{1/2}. delta = v^{exponent}; exponents are always even, so half
// densities are again integer powers of v.
//
// Everything is root-data bookkeeping: the exponent is -2 * sum over the
// relevant unipotent radical of mult_alpha * <alpha, lambda>, with E-valued
// root spaces weighted by their residue degree.
enum class DeltaSel { B_V, B_W, B_J, B_plus, B_r, P_X, P };

namespace detail {

// q_F-exponent weights of delta_B on the rank-k torus coordinates.
inline long borel_weight(const CaseDescriptor& c, int k, int i) {
    switch (c.kind) {
        case CaseKind::Split: return k - 1 - 2 * i;
        case CaseKind::InertEven: return 4 * (k - 1 - i) + 2;
        case CaseKind::InertOdd: return 4 * (k - 1 - i) + 4;
    }
    return 0;
}

inline long dot_borel(const CaseDescriptor& c, const std::vector<int>& lam) {
    long s = 0;
    const int k = static_cast<int>(lam.size());
    for (int i = 0; i < k; ++i) s += borel_weight(c, k, i) * lam[i];
    return s;
}

// lambda_r given as r entries (inert) or the pair (a;b) of 2r entries
// (split).
inline void check_lambda_r(const CaseDescriptor& c, const std::vector<int>& lam_r) {
    const size_t expect = c.split() ? 2 * c.r : c.r;
    if (lam_r.size() != expect) throw std::invalid_argument("lambda_r arity mismatch");
}

} // namespace detail

// Embeds lambda_r into the T_V coordinates.
inline std::vector<int> embed_lambda_r(const CaseDescriptor& c, const std::vector<int>& lam_r) {
    detail::check_lambda_r(c, lam_r);
    std::vector<int> lamV(c.n_minus, 0);
    for (int i = 0; i < c.r; ++i) lamV[i] = lam_r[i];
    if (c.split())
        for (int i = 0; i < c.r; ++i) lamV[c.n - 1 - i] = -lam_r[c.r + i];
    return lamV;
}

inline long delta_v_exponent(const CaseDescriptor& c, DeltaSel sel, const Cocharacter& lam) {
    switch (sel) {
        case DeltaSel::B_V:
            if (static_cast<int>(lam.lambda_V.size()) != c.n_minus)
                throw std::invalid_argument("lambda_V arity mismatch");
            return -2 * detail::dot_borel(c, lam.lambda_V);
        case DeltaSel::B_W:
            if (static_cast<int>(lam.lambda_W.size()) != c.m_minus)
                throw std::invalid_argument("lambda_W arity mismatch");
            return -2 * detail::dot_borel(c, lam.lambda_W);
        case DeltaSel::B_J: {
            // delta_{B_J}(t_W) = delta_{B_W}(t_W) |t_W|
            long e = delta_v_exponent(c, DeltaSel::B_W, lam);
            long tot = 0;
            for (int x : lam.lambda_W) tot += x;
            e += (c.split() ? -2 : -4) * tot;
            return e;
        }
        case DeltaSel::B_plus:
            // B^+ = B_V^- x B_W
            return -delta_v_exponent(c, DeltaSel::B_V, lam) +
                   delta_v_exponent(c, DeltaSel::B_W, lam);
        default:
            throw std::invalid_argument("selector takes a lambda_r argument");
    }
}

// B_r, P_X and P evaluated at lambda_r.
inline long delta_r_v_exponent(const CaseDescriptor& c, DeltaSel sel, const std::vector<int>& lam_r) {
    detail::check_lambda_r(c, lam_r);
    long ta = 0, tb = 0, wa = 0, wb = 0;
    for (int i = 0; i < c.r; ++i) {
        ta += lam_r[i];
        wa += static_cast<long>(c.r - 1 - 2 * i) * lam_r[i];
    }
    if (c.split()) {
        for (int i = 0; i < c.r; ++i) {
            tb += lam_r[c.r + i];
            wb += static_cast<long>(c.r - 1 - 2 * i) * lam_r[c.r + i];
        }
    }
    switch (sel) {
        case DeltaSel::B_r:
            return c.split() ? -2 * (wa + wb) : -4 * wa;
        case DeltaSel::P_X:
            return c.split() ? -2 * (c.m + c.r) * (ta + tb) : -4 * (c.m + c.r) * ta;
        case DeltaSel::P:
            return delta_r_v_exponent(c, DeltaSel::B_r, lam_r) +
                   delta_r_v_exponent(c, DeltaSel::P_X, lam_r);
        default:
            throw std::invalid_argument("selector takes a full cocharacter");
    }
}

// |lambda(varpi)| (the case's absolute value of the torus determinant) as a
// v-exponent: |t_W| on T_W, |det lambda_r| on T_r.
inline long absval_v_exponent_W(const CaseDescriptor& c, const std::vector<int>& lam_W) {
    long tot = 0;
    for (int x : lam_W) tot += x;
    return (c.split() ? -2 : -4) * tot;
}

inline long absval_v_exponent_r(const CaseDescriptor& c, const std::vector<int>& lam_r) {
    detail::check_lambda_r(c, lam_r);
    long tot = 0;
    for (int x : lam_r) tot += x;
    return (c.split() ? -2 : -4) * tot;
}

} // namespace wsf

#endif
