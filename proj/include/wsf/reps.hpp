#ifndef WSF_REPS_HPP
#define WSF_REPS_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfactors.hpp"
#include "matrix.hpp"
#include "satake.hpp"

namespace wsf {

// Generalized permutation matrix: e_j -> w[j] * e_{to[j]}. Every dual-group
// representation evaluated at a Frobenius-twisted diagonal representative has
// this shape, so determinants reduce to cycle products.
template <class S>
struct MonoMat {
    int dim = 0;
    std::vector<int> to;
    std::vector<S> w;

    static MonoMat identity(int d, const S& one) {
        MonoMat m;
        m.dim = d;
        m.to.resize(d);
        std::iota(m.to.begin(), m.to.end(), 0);
        m.w.assign(d, one);
        return m;
    }

    bool is_permutation() const {
        std::vector<char> seen(dim, 0);
        for (int j = 0; j < dim; ++j) {
            if (to[j] < 0 || to[j] >= dim || seen[to[j]]) return false;
            seen[to[j]] = 1;
        }
        return true;
    }

    // (a*b): apply b first.
    friend MonoMat operator*(const MonoMat& a, const MonoMat& b) {
        if (a.dim != b.dim) throw std::invalid_argument("MonoMat dim mismatch");
        MonoMat r;
        r.dim = a.dim;
        r.to.resize(a.dim);
        r.w.reserve(a.dim);
        for (int j = 0; j < a.dim; ++j) {
            r.to[j] = a.to[b.to[j]];
            r.w.push_back(b.w[j] * a.w[b.to[j]]);
        }
        return r;
    }
};

template <class S>
MonoMat<S> mono_tensor(const MonoMat<S>& a, const MonoMat<S>& b) {
    MonoMat<S> r;
    r.dim = a.dim * b.dim;
    r.to.resize(r.dim);
    r.w.reserve(r.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            r.to[i * b.dim + j] = a.to[i] * b.dim + b.to[j];
            r.w.push_back(a.w[i] * b.w[j]);
        }
    return r;
}

template <class S>
MonoMat<S> mono_dsum(const MonoMat<S>& a, const MonoMat<S>& b) {
    MonoMat<S> r;
    r.dim = a.dim + b.dim;
    r.to = a.to;
    r.w = a.w;
    for (int j = 0; j < b.dim; ++j) {
        r.to.push_back(a.dim + b.to[j]);
        r.w.push_back(b.w[j]);
    }
    return r;
}

// Restriction to a set of basis lines; the subset must be invariant.
template <class S>
MonoMat<S> mono_restrict(const MonoMat<S>& m, const std::vector<int>& idx) {
    std::vector<int> pos(m.dim, -1);
    for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
    MonoMat<S> r;
    r.dim = static_cast<int>(idx.size());
    r.to.resize(r.dim);
    for (size_t k = 0; k < idx.size(); ++k) {
        int img = m.to[idx[k]];
        if (pos[img] < 0) throw std::logic_error("restriction subspace not invariant");
        r.to[k] = pos[img];
        r.w.push_back(m.w[idx[k]]);
    }
    return r;
}

template <class S>
Mat<S> mono_dense(const MonoMat<S>& m, const S& zero) {
    Mat<S> d(m.dim, m.dim, zero);
    for (int j = 0; j < m.dim; ++j) d(m.to[j], j) = m.w[j];
    return d;
}

// det(1 - z M) by cycle decomposition.
template <class S>
S det_one_minus(const S& z, const MonoMat<S>& m, const S& one) {
    if (!m.is_permutation()) throw std::logic_error("matrix is not monomial-invertible");
    S out = one;
    std::vector<char> seen(m.dim, 0);
    for (int j0 = 0; j0 < m.dim; ++j0) {
        if (seen[j0]) continue;
        S cyc = one;
        S zpow = one;
        int j = j0;
        do {
            seen[j] = 1;
            cyc = cyc * m.w[j];
            zpow = zpow * z;
            j = m.to[j];
        } while (j != j0);
        out = out * (one - zpow * cyc);
    }
    return out;
}

// --- dual-group representations at twisted diagonal representatives ---------

// Base change: ^L U(k) -> ^L G_k, g.Fr -> ((g, g*), Fr).
template <class S>
SatakeG<S> rep_BC(const SatakeU<S>& s) {
    SatakeG<S> g;
    g.r = s.n;
    g.inert = s.inert;
    g.A = s.d;
    g.B = star_diag(s.d);
    return g;
}

// Twisted tensor: the 2kl-dimensional representation of ^L(G_k x G_l); the
// inert Frobenius swaps the two copies. Basis order: copy 0 then copy 1,
// (i,j) -> i*l + j within a copy.
template <class S>
MonoMat<S> rep_tensor_I(const SatakeG<S>& sk, const SatakeG<S>& sl) {
    const int k = sk.r, l = sl.r, kl = k * l;
    MonoMat<S> m;
    m.dim = 2 * kl;
    m.to.resize(m.dim);
    m.w.reserve(m.dim);
    const bool swap = sk.inert;
    for (int copy = 0; copy < 2; ++copy) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < l; ++j) {
                int from = copy * kl + i * l + j;
                int tocopy = swap ? 1 - copy : copy;
                m.to[from] = tocopy * kl + i * l + j;
                // under the copy swap, copy 0 maps through the second blocks
                const S& a = (swap ? (copy == 0 ? sk.B[i] : sk.A[i])
                                   : (copy == 0 ? sk.A[i] : sk.B[i]));
                const S& b = (swap ? (copy == 0 ? sl.B[j] : sl.A[j])
                                   : (copy == 0 ? sl.A[j] : sl.B[j]));
                m.w.push_back(a * b);
            }
    }
    return m;
}

template <class S>
MonoMat<S> rep_tensor_I_mu(const Ctx<S>& c, const SatakeG<S>& sk, const SatakeG<S>& sl) {
    return rep_tensor_I(sk, mu_bar_twist(c, sl));
}

// The same representation on identity-component elements ((A,B), id): no
// copy swap regardless of the case.
template <class S>
MonoMat<S> rep_tensor_I_free(const SatakeG<S>& sk, const SatakeG<S>& sl) {
    SatakeG<S> k = sk, l = sl;
    k.inert = false;
    l.inert = false;
    return rep_tensor_I(k, l);
}

// Rankin-Selberg representation R_{mubar}(S_V, S_W) on C^n (x) C^m (+) same.
template <class S>
MonoMat<S> rep_R_mu(const Ctx<S>& c, const SatakeU<S>& sv, const SatakeU<S>& sw) {
    return rep_tensor_I_mu(c, rep_BC(sv), rep_BC(sw));
}

inline std::vector<int> v_minus_indices(int n, int m, int rprime) {
    std::vector<int> idx;
    for (int copy = 0; copy < 2; ++copy)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j)
                if (i + j > rprime + 1) idx.push_back(copy * n * m + (i - 1) * m + (j - 1));
    return idx;
}

template <class S>
MonoMat<S> rep_R_minus(const Ctx<S>& c, const SatakeU<S>& sv, const SatakeU<S>& sw) {
    return mono_restrict(rep_R_mu(c, sv, sw), v_minus_indices(sv.n, sw.n, c.cs.rprime));
}

// The Lagrangian Y = R_mu(w_{0,V}) Y_-  (split case only).
template <class S>
std::vector<int> y_lagrangian_indices(const Ctx<S>& c) {
    if (!c.cs.split()) throw std::domain_error("no ^LT-stable Lagrangian in the inert case");
    const int n = c.cs.n, m = c.cs.m, nm = n * m;
    std::vector<int> yminus = v_minus_indices(n, m, c.cs.rprime);
    for (int j = 1; j <= m; ++j) {
        int i = j + c.cs.r, jj = m - j + 1;
        yminus.push_back((i - 1) * m + (jj - 1)); // copy 0
    }
    // image under the identity-component element ((P, P*), 1) with P the
    // coordinate reversal of C^n
    std::vector<int> out;
    for (int id : yminus) {
        int copy = id / nm, rest = id % nm, i = rest / m, j = rest % m;
        out.push_back(copy * nm + (n - 1 - i) * m + j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class S>
MonoMat<S> rep_Y_mu(const Ctx<S>& c, const SatakeU<S>& sv, const SatakeU<S>& sw) {
    return mono_restrict(rep_R_mu(c, sv, sw), y_lagrangian_indices(c));
}

// Asai representation on C^r (x) C^r with Fr -> (-1)^k swap in the inert case.
template <class S>
MonoMat<S> rep_asai(const Ctx<S>& c, const SatakeG<S>& s, int k_parity) {
    const int r = s.r;
    MonoMat<S> m;
    m.dim = r * r;
    m.to.resize(m.dim);
    m.w.reserve(m.dim);
    const S sign = (k_parity % 2 != 0) ? c.scalar(-1) : c.one;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (s.inert) {
                m.to[i * r + j] = j * r + i;
                m.w.push_back(sign * s.A[j] * s.B[i]);
            } else {
                m.to[i * r + j] = i * r + j;
                m.w.push_back(s.A[i] * s.B[j]);
            }
        }
    return m;
}

// Adjoint action on gl_n: conjugation, with the inert Frobenius acting by
// X -> -J tX J^{-1} (so E_{ij} -> -(-1)^{i+j} E_{n+1-j, n+1-i}).
template <class S>
MonoMat<S> rep_ad_U(const Ctx<S>& c, const SatakeU<S>& s) {
    const int n = s.n;
    MonoMat<S> m;
    m.dim = n * n;
    m.to.resize(m.dim);
    m.w.reserve(m.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!s.inert) {
                m.to[i * n + j] = i * n + j;
                m.w.push_back(s.d[i] * s.d[j].pow(-1));
            } else {
                int i2 = n - 1 - j, j2 = n - 1 - i;
                m.to[i * n + j] = i2 * n + j2;
                S wgt = s.d[i2] * s.d[j2].pow(-1);
                if ((i + j) % 2 == 0) wgt = wgt * c.scalar(-1); // -(-1)^{i+j}, 1-based parity
                m.w.push_back(wgt);
            }
        }
    return m;
}

// Adjoint action on Lie(^L G_r) = gl_r (+) gl_r with the inert copy swap.
template <class S>
MonoMat<S> rep_ad_Gr(const Ctx<S>& c, const SatakeG<S>& s) {
    const int r = s.r, rr = r * r;
    MonoMat<S> m;
    m.dim = 2 * rr;
    m.to.resize(m.dim);
    m.w.reserve(m.dim);
    (void)c;
    for (int copy = 0; copy < 2; ++copy)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                int from = copy * rr + i * r + j;
                int tocopy = s.inert ? 1 - copy : copy;
                m.to[from] = tocopy * rr + i * r + j;
                const std::vector<S>& blk =
                    (tocopy == 0) ? s.A : s.B; // conjugating block of the target copy
                m.w.push_back(blk[i] * blk[j].pow(-1));
            }
    return m;
}

// --- Weyl denominators D_{G/Q}(S) --------------------------------------------

enum class ParabolicSel { B, B_minus, P_X, G };

template <class S>
std::vector<int> u_complement_indices(const Ctx<S>& c, int n, ParabolicSel q) {
    std::vector<int> idx;
    const int r = c.cs.r, m = c.cs.m;
    auto blk = [&](int i) { return i < r ? 0 : (i < r + m ? 1 : 2); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool take = false;
            switch (q) {
                case ParabolicSel::B: take = i > j; break;        // lower triangle
                case ParabolicSel::B_minus: take = i < j; break;  // upper triangle
                case ParabolicSel::P_X: take = blk(i) > blk(j); break;
                case ParabolicSel::G: take = false; break;
            }
            if (take) idx.push_back(i * n + j);
        }
    return idx;
}

// det(1 - Ad(S)) on Lie(U-hat(n)) / Lie(Q-hat).
template <class S>
S d_quotient_U(const Ctx<S>& c, const SatakeU<S>& s, ParabolicSel q) {
    auto idx = u_complement_indices(c, s.n, q);
    if (idx.empty()) return c.one;
    return det_one_minus(c.one, mono_restrict(rep_ad_U(c, s), idx), c.one);
}

// D_{G-hat/B-hat}(S) for the pair (S_V, S_W); `plus` selects the Borel dual
// to B^+ = B_V^- x B_W.
template <class S>
S d_quotient_pair(const Ctx<S>& c, const SatakeU<S>& sv, const SatakeU<S>& sw, bool plus) {
    return d_quotient_U(c, sv, plus ? ParabolicSel::B_minus : ParabolicSel::B) *
           d_quotient_U(c, sw, ParabolicSel::B);
}

template <class S>
S d_quotient_Gr(const Ctx<S>& c, const SatakeG<S>& s) {
    const int r = s.r, rr = r * r;
    std::vector<int> idx;
    for (int copy = 0; copy < 2; ++copy)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (i > j) idx.push_back(copy * rr + i * r + j);
    if (idx.empty()) return c.one;
    return det_one_minus(c.one, mono_restrict(rep_ad_Gr(c, s), idx), c.one);
}

// det(1 - X . rep); the inverse is the local L-factor.
template <class S>
S l_factor_from_rep(const Ctx<S>& c, const MonoMat<S>& m) {
    return det_one_minus(c.X, m, c.one);
}

template <class S>
S det_one_minus_scaled(const Ctx<S>& c, int s_twice, const MonoMat<S>& m) {
    return det_one_minus(c.qF_pow(s_twice), m, c.one);
}

// --- characters of highest-weight representations ---------------------------

// Complete homogeneous symmetric polynomials h_0..h_K of the eigenvalues.
template <class S>
std::vector<S> h_list(const std::vector<S>& eigs, int K, const S& one) {
    std::vector<S> H(K + 1, one - one);
    H[0] = one;
    for (const S& x : eigs)
        for (int k = 1; k <= K; ++k) H[k] = H[k] + x * H[k - 1];
    return H;
}

// Schur polynomial by Jacobi-Trudi; negative dominant weights are handled by
// a determinant twist.
template <class S>
S schur(const std::vector<S>& eigs, std::vector<int> lambda, const S& one) {
    const int r = static_cast<int>(eigs.size());
    if (static_cast<int>(lambda.size()) != r) throw std::invalid_argument("schur arity");
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1]) throw std::domain_error("non-dominant weight");
    if (r == 0) return one;
    int shift = std::min(lambda.back(), 0);
    for (auto& x : lambda) x -= shift;
    int K = lambda.empty() ? 0 : lambda[0] + r;
    auto H = h_list(eigs, K, one);
    // det(h_{lambda_i - i + j}) over 1 <= i,j <= r, by cofactor expansion
    std::vector<std::vector<S>> M(r, std::vector<S>(r, one));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int k = lambda[i] - (i + 1) + (j + 1);
            M[i][j] = (k < 0) ? one - one : H[k];
        }
    // small determinant
    std::vector<int> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    std::function<S(int, std::vector<int>&)> ddet = [&](int row, std::vector<int>& cc) -> S {
        if (cc.size() == 1) return M[row][cc[0]];
        S acc = one - one;
        for (size_t p = 0; p < cc.size(); ++p) {
            int cj = cc[p];
            std::vector<int> rest;
            for (size_t q = 0; q < cc.size(); ++q)
                if (q != p) rest.push_back(cc[q]);
            S t = M[row][cj] * ddet(row + 1, rest);
            acc = (p % 2 == 0) ? acc + t : acc - t;
        }
        return acc;
    };
    S detv = ddet(0, cols);
    if (shift != 0) {
        S prod = one;
        for (const S& x : eigs) prod = prod * x;
        detv = detv * prod.pow(shift);
    }
    return detv;
}

// ch_{lambda}(S) for a single dominant integer vector of length r. Inert:
// the twisted character, i.e. the Schur value at the eigenvalues of AB.
// Split: the Weyl character of the first block (the block the unfolding
// formulas evaluate); the full rank-2r cone is reached via ch_lambda_pair.
template <class S>
S ch_lambda(const Ctx<S>& c, const SatakeG<S>& s, const std::vector<int>& lambda) {
    std::vector<S> eigs;
    for (int i = 0; i < s.r; ++i)
        eigs.push_back(s.inert ? s.A[i] * s.B[i] : s.A[i]);
    return schur(eigs, lambda, c.one);
}

template <class S>
S ch_lambda_pair(const Ctx<S>& c, const SatakeG<S>& s, const std::vector<int>& la,
                 const std::vector<int>& lb) {
    if (s.inert) {
        if (la != lb) throw std::invalid_argument("inert weights are diagonal pairs");
        return ch_lambda(c, s, la);
    }
    return schur(s.A, la, c.one) * schur(s.B, lb, c.one);
}

// Definitional route: the (twisted) Weyl character formula
// ch_lambda(S) = sum_w chi_lambda(wS) / D_{G_r/B_r}(wS).
template <class S>
S ch_lambda_weyl(const Ctx<S>& c, const SatakeG<S>& s, const std::vector<int>& lambda) {
    const int r = s.r;
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    S acc = c.one - c.one;
    do {
        SatakeG<S> ws = s;
        for (int i = 0; i < r; ++i) {
            ws.A[i] = s.A[perm[i]];
            ws.B[i] = s.B[perm[i]];
        }
        S chi = c.one;
        S den = c.one;
        if (s.inert) {
            for (int i = 0; i < r; ++i) chi = chi * (ws.A[i] * ws.B[i]).pow(lambda[i]);
            den = d_quotient_Gr(c, ws);
        } else {
            for (int i = 0; i < r; ++i) chi = chi * ws.A[i].pow(lambda[i]);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < i; ++j)
                    den = den * (c.one - ws.A[i] * ws.A[j].pow(-1));
        }
        acc = acc + chi / den;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// --- inert representative self-test ------------------------------------------

// Selects the diagonal completion for which both Satake reformulation
// identities hold symbolically (checked on an even and an odd case); the
// choice is frozen in tests/golden/inert_filling.txt by the verify suite.
inline bool inert_filling_candidate_ok(InertFilling f) {
    InertFilling saved = inert_filling();
    set_inert_filling(f);
    bool ok = true;
    for (auto [n, m] : {std::pair{2, 2}, {3, 1}}) {
        auto cs = build_case(FieldKind::Inert, n, m);
        auto ctx = symbolic_context(cs);
        auto inv = [](const RatFunc& x) { return x.pow(-1); };
        auto w0V = weyl_longest(cs, GroupTag::V);
        auto w0W = weyl_longest(cs, GroupTag::W);
        auto chi0 = weyl_act(w0V, ctx.chi, inv);
        auto eta0 = weyl_act(w0W, ctx.eta, inv);
        auto sv = satake_U_from_tuple(ctx, chi0, cs.n);
        auto sw = satake_U_from_tuple(ctx, eta0, cs.m);
        RatFunc det_route =
            det_one_minus(ctx.vpow(-1), rep_R_minus(ctx, sv, sw), ctx.one);
        RatFunc b_route = b_factor(ctx, ctx.chi, ctx.mu_bar_mult(ctx.eta));
        if (!(det_route == b_route)) ok = false;
        RatFunc d_route = d_quotient_pair(ctx, sv, sw, false);
        RatFunc dd = d_factor(ctx, ctx.chi, GroupTag::V) * d_factor(ctx, ctx.eta, GroupTag::W);
        if (!(d_route == dd.pow(-1))) ok = false;
    }
    set_inert_filling(saved);
    return ok;
}

inline InertFilling resolve_inert_filling() {
    static bool resolved = false;
    if (!resolved) {
        if (inert_filling_candidate_ok(InertFilling::Ones))
            set_inert_filling(InertFilling::Ones);
        else if (inert_filling_candidate_ok(InertFilling::SymmetricInverse))
            set_inert_filling(InertFilling::SymmetricInverse);
        else
            throw std::logic_error("no inert diagonal completion satisfies the Satake identities");
        resolved = true;
    }
    return inert_filling();
}

} // namespace wsf

#endif
