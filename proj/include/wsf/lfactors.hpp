#ifndef WSF_LFACTORS_HPP
#define WSF_LFACTORS_HPP

#include <stdexcept>
#include <vector>

#include "context.hpp"
#include "modchar.hpp"
#include "roots.hpp"
#include "weyl.hpp"

namespace wsf {

enum class LKind { Zeta_F, Zeta_E, L_F, L_E };

// L_F(s,x) = (1 - x q_F^{-s})^{-1} and friends; s is passed doubled so that
// half-integer arguments stay integral powers of v.
template <class S>
S local_L(const Ctx<S>& c, LKind which, int s_twice, const S& x) {
    switch (which) {
        case LKind::Zeta_F:
            return (c.one - c.qF_pow(s_twice)).pow(-1);
        case LKind::Zeta_E:
            // split case: zeta_E(s) = zeta_F(s)^2
            return c.cs.split() ? (c.one - c.qF_pow(s_twice)).pow(-2)
                                : (c.one - c.qE_pow(s_twice)).pow(-1);
        case LKind::L_F:
            return (c.one - x * c.qF_pow(s_twice)).pow(-1);
        case LKind::L_E:
            return (c.one - x * c.qE_pow(s_twice)).pow(-1);
    }
    throw std::logic_error("unreachable");
}

template <class S>
S local_L_inv(const Ctx<S>& c, LKind which, int s_twice, const S& x) {
    switch (which) {
        case LKind::L_F: return c.one - x * c.qF_pow(s_twice);
        case LKind::L_E: return c.one - x * c.qE_pow(s_twice);
        default: return local_L(c, which, s_twice, x).pow(-1);
    }
}

// --- Gross Delta-constants ---------------------------------------------------

enum class DeltaConst { U_V, U_W, G_k, T_W, T_W_prime };

template <class S>
S delta_const(const Ctx<S>& c, DeltaConst which, int k = 0) {
    S out = c.one;
    auto LF = [&](int s, long sign) { return local_L(c, LKind::L_F, 2 * s, c.scalar(sign)); };
    switch (which) {
        case DeltaConst::U_V:
        case DeltaConst::U_W: {
            int d = (which == DeltaConst::U_V) ? c.cs.n : c.cs.m;
            for (int i = 1; i <= d; ++i)
                out = out * LF(i, c.cs.inert() && (i % 2 == 1) ? -1 : 1);
            return out;
        }
        case DeltaConst::G_k:
            for (int i = 1; i <= k; ++i) out = out * local_L(c, LKind::Zeta_E, 2 * i, c.one);
            return out;
        case DeltaConst::T_W:
            if (c.cs.split()) return LF(1, 1).pow(c.cs.m);
            return LF(1, 1).pow(c.cs.m_minus) * LF(1, -1).pow(c.cs.m_plus);
        case DeltaConst::T_W_prime:
            if (c.cs.kind == CaseKind::InertOdd)
                return LF(1, 1).pow(c.cs.m_minus) * LF(1, -1).pow(c.cs.m_minus);
            return delta_const(c, DeltaConst::T_W);
    }
    throw std::logic_error("unreachable");
}

// --- b / d / c factors -------------------------------------------------------

enum class BVariant { Standard, Cross };

// The b-factor tables. `chi` and `eta` are taken exactly as given; the
// mu-twists of the main theorems are applied by the caller.
template <class S>
S b_factor(const Ctx<S>& c, const std::vector<S>& chi, const std::vector<S>& eta,
           BVariant variant = BVariant::Standard) {
    const auto& cs = c.cs;
    S out = c.one;
    auto LinvE = [&](const S& x) { return local_L_inv(c, LKind::L_E, 1, x); };
    auto LinvF = [&](const S& x) { return local_L_inv(c, LKind::L_F, 1, x); };
    if (cs.split()) {
        const int thr = cs.rprime + 1;
        for (int i = 1; i <= cs.n; ++i) {
            for (int j = 1; j <= cs.m; ++j) {
                const S& xi = chi[i - 1];
                const S& yj = eta[j - 1];
                if (variant == BVariant::Cross ? (i + j <= thr) : (i + j < thr))
                    out = out * LinvF(xi * yj);
                else if (i + j > thr)
                    out = out * LinvF(xi.pow(-1) * yj.pow(-1));
            }
        }
        return out;
    }
    if (variant == BVariant::Cross) throw std::domain_error("cross b-factor requires the split case");
    for (int i = 1; i <= cs.n_minus; ++i) {
        for (int j = 1; j <= cs.m_minus; ++j) {
            const S& xi = chi[i - 1];
            const S& yj = eta[j - 1];
            out = out * LinvE(xi * yj);
            if (i < cs.r + j) out = out * LinvE(xi * yj.pow(-1));
            if (i > cs.r + j) out = out * LinvE(xi.pow(-1) * yj);
        }
    }
    if (cs.kind == CaseKind::InertOdd) {
        for (int i = 0; i < cs.n_minus; ++i) out = out * LinvE(c.scalar(-1) * chi[i]);
        for (int j = 0; j < cs.m_minus; ++j) out = out * LinvE(eta[j]);
    }
    return out;
}

template <class S>
S d_factor(const Ctx<S>& c, const std::vector<S>& chars, GroupTag tag) {
    S out = c.one;
    auto inv = [](const S& x) { return x.pow(-1); };
    for (const Root& r : positive_nd_roots(c.cs, tag))
        out = out * (c.one - coroot_pairing(chars, r, inv)).pow(-1);
    return out;
}

// Casselman c-factor of a single non-divisible positive root.
template <class S>
S c_alpha(const Ctx<S>& c, const std::vector<S>& chars, const Root& r) {
    auto inv = [](const S& x) { return x.pow(-1); };
    switch (r.form) {
        case RootForm::AminusB:
        case RootForm::AplusB: {
            S pair = coroot_pairing(chars, r, inv);
            S q1 = c.cs.split() ? c.qF_pow(2) : c.qE_pow(2);
            return (c.one - q1 * pair) / (c.one - pair);
        }
        case RootForm::TwoA: {
            const S& x = chars[r.a];
            return (c.one - c.qF_pow(2) * x) / (c.one - x);
        }
        case RootForm::A: {
            const S& x = chars[r.a];
            return (c.one - c.qE_pow(2) * x) * (c.one + c.qF_pow(2) * x) /
                   (c.one - x * x);
        }
    }
    throw std::logic_error("unreachable");
}

// Numerator of c_alpha against the d-factor: c_alpha(chars) * (1 - <chars,alpha^vee>).
template <class S>
S c_alpha_numerator(const Ctx<S>& c, const std::vector<S>& chars, const Root& r) {
    switch (r.form) {
        case RootForm::AminusB:
        case RootForm::AplusB: {
            auto inv = [](const S& x) { return x.pow(-1); };
            S pair = coroot_pairing(chars, r, inv);
            S q1 = c.cs.split() ? c.qF_pow(2) : c.qE_pow(2);
            return c.one - q1 * pair;
        }
        case RootForm::TwoA:
            return c.one - c.qF_pow(2) * chars[r.a];
        case RootForm::A:
            return (c.one - c.qE_pow(2) * chars[r.a]) * (c.one + c.qF_pow(2) * chars[r.a]);
    }
    throw std::logic_error("unreachable");
}

// c_w = product of c_alpha over positive non-divisible roots sent negative.
template <class S>
S c_w(const Ctx<S>& c, const std::vector<S>& chars, const WeylElement& w, GroupTag tag) {
    S out = c.one;
    const int k = w.rank();
    for (const Root& r : positive_nd_roots(c.cs, tag)) {
        if (root_vector_negative(weyl_act_cochar(w, root_vector(r, k))))
            out = out * c_alpha(c, chars, r);
    }
    return out;
}

template <class S>
S c_w0(const Ctx<S>& c, const std::vector<S>& chars, GroupTag tag) {
    return c_w(c, chars, weyl_longest(c.cs, tag), tag);
}

// --- Gamma factors -----------------------------------------------------------

enum class GammaSel { Gamma1_V, Gamma1_W, Gamma2, Gamma, Pi };

template <class S>
S gamma_2(const Ctx<S>& c, const std::vector<S>& chi, const std::vector<S>& eta) {
    const auto& cs = c.cs;
    S out = c.one;
    auto LE = [&](const S& x) { return local_L(c, LKind::L_E, 1, x); };
    auto LF = [&](const S& x) { return local_L(c, LKind::L_F, 1, x); };
    if (cs.split()) {
        const int thr = cs.rprime + 1;
        for (int i = 1; i <= cs.n; ++i)
            for (int j = 1; j <= cs.m; ++j)
                out = out * (i + j <= thr ? LF(chi[i - 1] * eta[j - 1])
                                          : LF(chi[i - 1].pow(-1) * eta[j - 1].pow(-1)));
        return out;
    }
    for (int j = 1; j <= cs.m_minus; ++j) {
        const S& yj = eta[j - 1];
        for (int i = 1; i <= cs.n_minus; ++i)
            out = out * LE(chi[i - 1] * yj) * LE(chi[i - 1].pow(-1) * yj);
        for (int i = 1; i <= cs.r + j - 1; ++i)
            out = out * LE(chi[i - 1] * yj.pow(-1)) / LE(chi[i - 1].pow(-1) * yj);
    }
    if (cs.kind == CaseKind::InertOdd) {
        auto LF1 = [&](const S& x) { return local_L(c, LKind::L_F, 2, x); };
        for (int i = 0; i < cs.n_minus; ++i) out = out * LF1(c.scalar(-1) * chi[i]);
        for (int j = 0; j < cs.m_minus; ++j) out = out * LF1(eta[j]);
    }
    return out;
}

template <class S>
S gamma_pi(const Ctx<S>& c, const std::vector<S>& chi, const std::vector<S>& eta) {
    const auto& cs = c.cs;
    S out = delta_const(c, DeltaConst::T_W_prime).pow(-1);
    if (cs.split()) {
        for (int j = 1; j <= cs.m; ++j)
            out = out * local_L(c, LKind::L_F, 1, eta[j - 1] * chi[cs.rprime - j]);
    } else {
        for (int j = 1; j <= cs.m_minus; ++j)
            out = out * local_L(c, LKind::L_E, 1, eta[j - 1] * chi[cs.r + j - 1].pow(-1));
    }
    return out;
}

// Gamma(chi,eta) = Gamma_1^V(chi) Gamma_1^W(mu eta) Gamma_2(chi,eta). The
// Gamma1 selectors evaluate at the tuple exactly as given; only the combined
// Gamma selector applies the mu-twist of its defining formula.
template <class S>
S gamma_factors(const Ctx<S>& c, const std::vector<S>& chi, const std::vector<S>& eta,
                GammaSel which) {
    switch (which) {
        case GammaSel::Gamma1_V:
            return c_w0(c, chi, GroupTag::V) / d_factor(c, chi, GroupTag::V);
        case GammaSel::Gamma1_W:
            return c_w0(c, eta, GroupTag::W) / d_factor(c, eta, GroupTag::W);
        case GammaSel::Gamma2:
            return gamma_2(c, chi, eta);
        case GammaSel::Gamma: {
            std::vector<S> mueta = c.mu_mult(eta);
            return gamma_factors(c, chi, eta, GammaSel::Gamma1_V) *
                   gamma_factors(c, chi, mueta, GammaSel::Gamma1_W) * gamma_2(c, chi, eta);
        }
        case GammaSel::Pi:
            return gamma_pi(c, chi, eta);
    }
    throw std::logic_error("unreachable");
}

// Gamma(chi,eta) broken into small factors. The longest element sends every
// positive root negative, so Gamma_1 = c_{w_0}/d collapses to the product of
// c-numerators over the positive non-divisible roots; the Gamma_2 L-factors
// are appended individually. Ratios of Gamma values across a Weyl reflection
// should be taken factorwise to keep the canonical forms small.
template <class S>
std::vector<S> gamma_factor_list(const Ctx<S>& c, const std::vector<S>& chi,
                                 const std::vector<S>& eta) {
    std::vector<S> out;
    for (const Root& r : positive_nd_roots(c.cs, GroupTag::V))
        out.push_back(c_alpha_numerator(c, chi, r));
    std::vector<S> mueta = c.mu_mult(eta);
    for (const Root& r : positive_nd_roots(c.cs, GroupTag::W))
        out.push_back(c_alpha_numerator(c, mueta, r));
    const auto& cs = c.cs;
    auto LE = [&](const S& x) { return local_L(c, LKind::L_E, 1, x); };
    auto LF = [&](const S& x) { return local_L(c, LKind::L_F, 1, x); };
    if (cs.split()) {
        const int thr = cs.rprime + 1;
        for (int i = 1; i <= cs.n; ++i)
            for (int j = 1; j <= cs.m; ++j)
                out.push_back(i + j <= thr ? LF(chi[i - 1] * eta[j - 1])
                                           : LF(chi[i - 1].pow(-1) * eta[j - 1].pow(-1)));
        return out;
    }
    for (int j = 1; j <= cs.m_minus; ++j) {
        const S& yj = eta[j - 1];
        for (int i = 1; i <= cs.n_minus; ++i) {
            out.push_back(LE(chi[i - 1] * yj));
            out.push_back(LE(chi[i - 1].pow(-1) * yj));
        }
        for (int i = 1; i <= cs.r + j - 1; ++i) {
            out.push_back(LE(chi[i - 1] * yj.pow(-1)));
            out.push_back(LE(chi[i - 1].pow(-1) * yj).pow(-1));
        }
    }
    if (cs.kind == CaseKind::InertOdd) {
        auto LF1 = [&](const S& x) { return local_L(c, LKind::L_F, 2, x); };
        for (int i = 0; i < cs.n_minus; ++i) out.push_back(LF1(c.scalar(-1) * chi[i]));
        for (int j = 0; j < cs.m_minus; ++j) out.push_back(LF1(eta[j]));
    }
    return out;
}

// --- gamma pairing values (volume-stripped) ----------------------------------

// The closed-form values of the two gamma-value propositions, with the
// vol(I_V) vol(I_J)-type prefactors stripped (they cancel in every consumed
// ratio). Two of the printed table entries carry inconsistent subscripts;
// both the literal text and the index-repaired variant are implemented, and
// the functional-equation suite records which one satisfies the Gamma-ratio
// identity.
enum class GammaTableVariant { AsPrinted, Corrected };

struct Reflection {
    enum class Side { Alpha, Beta } side;
    int index; // 1-based simple-root index on the chosen side
};

template <class S>
S gamma_pairing_value(const Ctx<S>& c, const std::vector<S>& chi, const std::vector<S>& eta,
                      const Reflection& refl,
                      GammaTableVariant variant = GammaTableVariant::Corrected) {
    const auto& cs = c.cs;
    auto LE = [&](int s2, const S& x) { return local_L(c, LKind::L_E, s2, x); };
    auto LF = [&](int s2, const S& x) { return local_L(c, LKind::L_F, s2, x); };
    const S qF = c.vpow(2);
    const S qE = cs.split() ? qF : c.vpow(4);

    if (refl.side == Reflection::Side::Alpha) {
        const int i = refl.index;
        const int top = cs.split() ? cs.n - 1 : cs.n_minus;
        if (i < 1 || i > top) throw std::domain_error("alpha reflection index out of range");
        if (cs.split()) {
            if (i <= cs.r || i > cs.rprime)
                return qF * LF(2, chi[i - 1] * chi[i].pow(-1)).pow(-1);
            const int j1 = variant == GammaTableVariant::AsPrinted ? i - cs.rprime + 1
                                                                   : cs.rprime - i + 1;
            const int j2 = variant == GammaTableVariant::AsPrinted ? i - cs.r + 1
                                                                   : cs.rprime - i + 1;
            if (j1 < 1 || j1 > cs.m || j2 < 1 || j2 > cs.m)
                throw std::domain_error("printed table index out of range");
            return (qF - c.one) * LF(1, chi[i - 1] * eta[j1 - 1]) *
                   LF(1, chi[i].pow(-1) * eta[j2 - 1].pow(-1)) /
                   LF(2, chi[i - 1] * chi[i].pow(-1));
        }
        if (i < cs.n_minus) {
            if (i < cs.r) return qE * LE(2, chi[i - 1] * chi[i].pow(-1)).pow(-1);
            const int j = i - cs.r + 1;
            return (qE - c.one) * LE(1, chi[i - 1] * eta[j - 1].pow(-1)) *
                   LE(1, chi[i].pow(-1) * eta[j - 1]) / LE(2, chi[i - 1] * chi[i].pow(-1));
        }
        if (cs.kind == CaseKind::InertEven) return qF * LF(2, chi[cs.n_minus - 1]).pow(-1);
        return qE * qF * LE(2, chi[cs.n_minus - 1]).pow(-1);
    }

    const int j = refl.index;
    const int top = cs.split() ? cs.m - 1 : cs.m_minus;
    if (j < 1 || j > top) throw std::domain_error("beta reflection index out of range");
    const S pi = gamma_pi(c, chi, eta);
    if (cs.split()) {
        return pi * qF * LF(1, eta[j - 1] * chi[cs.rprime - j - 1]) *
               LF(1, eta[j].pow(-1) * chi[cs.rprime - j].pow(-1)) /
               (LF(2, eta[j - 1] * eta[j].pow(-1)) *
                LF(2, chi[cs.rprime - j - 1] * chi[cs.rprime - j].pow(-1)));
    }
    if (j < cs.m_minus) {
        return pi * qE * LE(1, eta[j - 1] * chi[cs.r + j].pow(-1)) *
               LE(1, chi[cs.r + j - 1] * eta[j].pow(-1)) /
               (LE(2, eta[j - 1] * eta[j].pow(-1)) *
                LE(2, chi[cs.r + j - 1] * chi[cs.r + j].pow(-1)));
    }
    // last simple root on the W side
    if (variant == GammaTableVariant::AsPrinted && cs.n_minus > cs.m_minus)
        throw std::domain_error("printed table index out of range");
    const S num = variant == GammaTableVariant::AsPrinted
                      ? LF(2, chi[cs.m_minus - 1] * eta[cs.n_minus - 1])
                      : LF(2, chi[cs.n_minus - 1] * eta[cs.m_minus - 1]);
    if (cs.kind == CaseKind::InertEven) {
        return pi * qF * num /
               (LF(2, c.scalar(-1) * eta[cs.m_minus - 1]) * LF(2, chi[cs.n_minus - 1]));
    }
    return pi * qE * qF * num /
           (LE(2, c.scalar(-1) * eta[cs.m_minus - 1]) * LE(2, chi[cs.n_minus - 1]));
}

} // namespace wsf

#endif
