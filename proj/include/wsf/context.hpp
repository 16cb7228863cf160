#ifndef WSF_CONTEXT_HPP
#define WSF_CONTEXT_HPP

#include <random>
#include <string>
#include <vector>

#include "cases.hpp"
#include "fp.hpp"
#include "modular.hpp"
#include "ratfunc.hpp"

namespace wsf {

// Fixed ordered variable set {v, u, x_1.., y_1.., t_1.., X}. The t-block
// holds auxiliary dual-torus coordinates (Satake parameters of the r-block
// representation tau) used by the unfolding identities.
struct VarTable {
    int nx = 0, ny = 0, nt = 0;

    int arity() const { return 3 + nx + ny + nt; }
    int iv() const { return 0; }
    int iu() const { return 1; }
    int ix(int i) const { return 2 + i; }
    int iy(int j) const { return 2 + nx + j; }
    int it(int k) const { return 2 + nx + ny + k; }
    int iX() const { return 2 + nx + ny + nt; }

    std::vector<std::string> names() const {
        std::vector<std::string> n;
        n.push_back("v");
        n.push_back("u");
        for (int i = 0; i < nx; ++i) n.push_back("x" + std::to_string(i + 1));
        for (int j = 0; j < ny; ++j) n.push_back("y" + std::to_string(j + 1));
        for (int k = 0; k < nt; ++k) n.push_back("t" + std::to_string(k + 1));
        n.push_back("X");
        return n;
    }
};

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<RatFunc> {
    static RatFunc from_int(const RatFunc& proto, long k) {
        return RatFunc::constant(proto.arity(), Rat(k));
    }
};

template <>
struct ScalarOps<Fp> {
    static Fp from_int(const Fp&, long k) { return Fp(k); }
};

// Evaluation context: the case data plus concrete values for every formal
// variable, over the symbolic field (RatFunc) or a prime field (Fp).
template <class S>
struct Ctx {
    CaseDescriptor cs;
    VarTable vt;
    std::vector<S> chi;  // length chi_rank
    std::vector<S> eta;  // length eta_rank
    std::vector<S> tv;   // auxiliary t-coordinates
    S u, v, X;
    S one;

    S scalar(long k) const { return ScalarOps<S>::from_int(one, k); }
    S vpow(long e) const { return v.pow(e); }
    S qF_pow(int s_twice) const { return v.pow(-static_cast<long>(s_twice)); }      // q_F^{-s}
    S qE_pow(int s_twice) const {                                                   // q_E^{-s}
        return cs.split() ? qF_pow(s_twice) : v.pow(-2L * s_twice);
    }

    // mu(varpi): the free unit u in the split case, -1 in the inert case.
    S mu_unit() const { return cs.split() ? u : scalar(-1); }
    S mu_bar_unit() const { return cs.split() ? u.pow(-1) : scalar(-1); }

    std::vector<S> mu_mult(const std::vector<S>& tuple) const {
        std::vector<S> out = tuple;
        const S m = mu_unit();
        for (auto& x : out) x = x * m;
        return out;
    }
    std::vector<S> mu_bar_mult(const std::vector<S>& tuple) const {
        std::vector<S> out = tuple;
        const S m = mu_bar_unit();
        for (auto& x : out) x = x * m;
        return out;
    }
};

inline Ctx<RatFunc> symbolic_context(const CaseDescriptor& cs, int nt = 0) {
    Ctx<RatFunc> c;
    c.cs = cs;
    c.vt = VarTable{cs.chi_rank(), cs.eta_rank(), nt};
    const int A = c.vt.arity();
    c.one = RatFunc::one(A);
    c.v = RatFunc::variable(A, c.vt.iv());
    c.u = RatFunc::variable(A, c.vt.iu());
    c.X = RatFunc::variable(A, c.vt.iX());
    for (int i = 0; i < cs.chi_rank(); ++i) c.chi.push_back(RatFunc::variable(A, c.vt.ix(i)));
    for (int j = 0; j < cs.eta_rank(); ++j) c.eta.push_back(RatFunc::variable(A, c.vt.iy(j)));
    for (int k = 0; k < nt; ++k) c.tv.push_back(RatFunc::variable(A, c.vt.it(k)));
    return c;
}

inline Ctx<Fp> modular_context(const CaseDescriptor& cs, int nt, std::mt19937_64& rng) {
    Ctx<Fp> c;
    c.cs = cs;
    c.vt = VarTable{cs.chi_rank(), cs.eta_rank(), nt};
    c.one = Fp(1);
    c.v = Fp::random_unit(rng);
    c.u = cs.split() ? Fp::random_unit(rng) : Fp(-1);
    c.X = Fp::random_unit(rng);
    for (int i = 0; i < cs.chi_rank(); ++i) c.chi.push_back(Fp::random_unit(rng));
    for (int j = 0; j < cs.eta_rank(); ++j) c.eta.push_back(Fp::random_unit(rng));
    for (int k = 0; k < nt; ++k) c.tv.push_back(Fp::random_unit(rng));
    return c;
}

// Point view of a modular context in the symbolic variable order (for
// evaluating stored RatFuncs at the same parameters).
inline std::vector<Fp> context_point(const Ctx<Fp>& c) {
    std::vector<Fp> pt(c.vt.arity());
    pt[c.vt.iv()] = c.v;
    pt[c.vt.iu()] = c.u;
    for (int i = 0; i < c.vt.nx; ++i) pt[c.vt.ix(i)] = c.chi[i];
    for (int j = 0; j < c.vt.ny; ++j) pt[c.vt.iy(j)] = c.eta[j];
    for (int k = 0; k < c.vt.nt; ++k) pt[c.vt.it(k)] = c.tv[k];
    pt[c.vt.iX()] = c.X;
    return pt;
}

} // namespace wsf

#endif
