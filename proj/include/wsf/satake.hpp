#ifndef WSF_SATAKE_HPP
#define WSF_SATAKE_HPP

#include <stdexcept>
#include <vector>

#include "context.hpp"

namespace wsf {

// Frobenius-twisted diagonal representative d . Fr in ^L U(n). In the inert
// case Fr acts by g -> g* = J tg^{-1} J^{-1}; in the split case it acts
// trivially.
template <class S>
struct SatakeU {
    int n = 0;
    bool inert = false;
    std::vector<S> d;
};

// Representative ((A,B), Fr) in ^L G_r; Fr swaps the two factors in the
// inert case.
template <class S>
struct SatakeG {
    int r = 0;
    bool inert = false;
    std::vector<S> A, B;
};

// diag(x)* = diag of reversed inverses (the J-signs cancel on diagonals).
template <class S>
std::vector<S> star_diag(const std::vector<S>& x) {
    std::vector<S> out(x.rbegin(), x.rend());
    for (auto& v : out) v = v.pow(-1);
    return out;
}

// How the chi-tuple fills the n diagonal slots of the inert representative.
// The paper only pins the twisted conjugacy class; the slot convention is
// selected by the dual-group determinant self-test (see resolve_inert_filling
// in reps.hpp) and frozen in tests/golden/inert_filling.txt.
enum class InertFilling { Ones, SymmetricInverse };

namespace detail {
inline InertFilling& inert_filling_choice() {
    static InertFilling f = InertFilling::Ones;
    return f;
}
} // namespace detail

inline InertFilling inert_filling() { return detail::inert_filling_choice(); }
inline void set_inert_filling(InertFilling f) { detail::inert_filling_choice() = f; }

template <class S>
SatakeU<S> satake_U_from_tuple(const Ctx<S>& c, const std::vector<S>& tuple, int dim) {
    SatakeU<S> s;
    s.n = dim;
    s.inert = c.cs.inert();
    if (!s.inert) {
        if (static_cast<int>(tuple.size()) != dim) throw std::invalid_argument("tuple size");
        s.d = tuple;
        return s;
    }
    const int k = static_cast<int>(tuple.size());
    s.d.assign(dim, c.one);
    for (int i = 0; i < k; ++i) s.d[i] = tuple[i];
    if (inert_filling() == InertFilling::SymmetricInverse)
        for (int i = 0; i < k; ++i) s.d[dim - 1 - i] = tuple[i].pow(-1);
    return s;
}

// The pair (S_V, S_W) attached to the unramified characters of the context.
template <class S>
SatakeU<S> satake_V(const Ctx<S>& c) { return satake_U_from_tuple(c, c.chi, c.cs.n); }

template <class S>
SatakeU<S> satake_W(const Ctx<S>& c) { return satake_U_from_tuple(c, c.eta, c.cs.m); }

// r-block Levi image: S^{(r)} = ((g^{(1)}, g^{(2)*}), Fr).
template <class S>
SatakeG<S> block_r(const SatakeU<S>& s, int r, int m) {
    if (s.n != 2 * r + m) throw std::invalid_argument("block shape mismatch");
    SatakeG<S> g;
    g.r = r;
    g.inert = s.inert;
    g.A.assign(s.d.begin(), s.d.begin() + r);
    std::vector<S> tail(s.d.begin() + r + m, s.d.end());
    g.B = star_diag(tail);
    return g;
}

// m-block Levi image S^{(m)} in ^L U(m).
template <class S>
SatakeU<S> block_m(const SatakeU<S>& s, int r, int m) {
    if (s.n != 2 * r + m) throw std::invalid_argument("block shape mismatch");
    SatakeU<S> out;
    out.n = m;
    out.inert = s.inert;
    out.d.assign(s.d.begin() + r, s.d.begin() + r + m);
    return out;
}

// Block-diagonal assembly of the Satake parameter of the parabolic induction
// from G_r x U(W): the element of ^L U(n) whose (r)- and (m)-blocks are the
// given parameters.
template <class S>
SatakeU<S> satake_sigma(const SatakeG<S>& sr, const SatakeU<S>& sw) {
    SatakeU<S> out;
    out.n = 2 * sr.r + sw.n;
    out.inert = sw.inert;
    out.d = sr.A;
    out.d.insert(out.d.end(), sw.d.begin(), sw.d.end());
    std::vector<S> g2 = star_diag(sr.B); // g^{(2)} with g^{(2)*} = B
    out.d.insert(out.d.end(), g2.begin(), g2.end());
    return out;
}

// Star involution and Galois conjugate on ^L G_r.
template <class S>
SatakeG<S> star(const SatakeG<S>& s) {
    SatakeG<S> out = s;
    out.A = star_diag(s.B);
    out.B = star_diag(s.A);
    return out;
}

template <class S>
SatakeG<S> conj_c(const SatakeG<S>& s) {
    SatakeG<S> out = s;
    out.A = s.B;
    out.B = s.A;
    return out;
}

// mu-bar twist: ((I,-I), id) . S in the inert case,
// ((mubar(pi) I, mu(pi) I), id) . S in the split case.
template <class S>
SatakeG<S> mu_bar_twist(const Ctx<S>& c, const SatakeG<S>& s) {
    SatakeG<S> out = s;
    if (c.cs.inert()) {
        for (auto& x : out.B) x = x * c.scalar(-1);
    } else {
        S ub = c.u.pow(-1);
        for (auto& x : out.A) x = x * ub;
        for (auto& x : out.B) x = x * c.u;
    }
    return out;
}

template <class S>
SatakeG<S> mu_twist(const Ctx<S>& c, const SatakeG<S>& s) {
    SatakeG<S> out = s;
    if (c.cs.inert()) {
        for (auto& x : out.B) x = x * c.scalar(-1);
    } else {
        for (auto& x : out.A) x = x * c.u;
        S ub = c.u.pow(-1);
        for (auto& x : out.B) x = x * ub;
    }
    return out;
}

// Scales both blocks (used for the q^{-s}-shifted parameter S_{r,s}).
template <class S>
SatakeG<S> scale_G(const SatakeG<S>& s, const S& z) {
    SatakeG<S> out = s;
    for (auto& x : out.A) x = x * z;
    for (auto& x : out.B) x = x * z;
    return out;
}

// Auxiliary r-block parameter from the context's t-coordinates: inert uses
// ((diag t, I), Fr) so the base-change eigenvalues are the t_i; split uses
// ((diag t_1..t_r, diag t_{r+1}..t_{2r}), Fr).
template <class S>
SatakeG<S> satake_r_from_tvars(const Ctx<S>& c) {
    SatakeG<S> g;
    g.r = c.cs.r;
    g.inert = c.cs.inert();
    if (g.inert) {
        if (static_cast<int>(c.tv.size()) < g.r) throw std::invalid_argument("need r t-vars");
        g.A.assign(c.tv.begin(), c.tv.begin() + g.r);
        g.B.assign(g.r, c.one);
    } else {
        if (static_cast<int>(c.tv.size()) < 2 * g.r) throw std::invalid_argument("need 2r t-vars");
        g.A.assign(c.tv.begin(), c.tv.begin() + g.r);
        g.B.assign(c.tv.begin() + g.r, c.tv.begin() + 2 * g.r);
    }
    return g;
}

} // namespace wsf

#endif
