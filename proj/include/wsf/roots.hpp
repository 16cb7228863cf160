#ifndef WSF_ROOTS_HPP
#define WSF_ROOTS_HPP

#include <stdexcept>
#include <vector>

#include "cases.hpp"
#include "weyl.hpp"

namespace wsf {

// Non-divisible roots of the relative root system:
//   split        -> type A:  e_a - e_b (a < b)
//   inert even   -> type C:  e_a +- e_b, 2 e_a
//   inert odd    -> type BC (non-divisible part): e_a +- e_b, e_a
enum class RootForm { AminusB, AplusB, TwoA, A };

struct Root {
    RootForm form;
    int a = 0, b = 0; // 0-based indices, a < b where two indices apply

    bool operator==(const Root& o) const { return form == o.form && a == o.a && b == o.b; }
};

inline std::vector<Root> positive_nd_roots(const CaseDescriptor& c, GroupTag tag) {
    const int k = (tag == GroupTag::V) ? c.n_minus : (tag == GroupTag::W ? c.m_minus : c.r);
    std::vector<Root> out;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) out.push_back({RootForm::AminusB, a, b});
    if (c.inert() && tag != GroupTag::Gr) {
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) out.push_back({RootForm::AplusB, a, b});
        for (int a = 0; a < k; ++a)
            out.push_back({c.kind == CaseKind::InertEven ? RootForm::TwoA : RootForm::A, a, 0});
    }
    return out;
}

inline std::vector<Root> simple_roots(const CaseDescriptor& c, GroupTag tag) {
    const int k = (tag == GroupTag::V) ? c.n_minus : (tag == GroupTag::W ? c.m_minus : c.r);
    std::vector<Root> out;
    for (int i = 0; i + 1 < k; ++i) out.push_back({RootForm::AminusB, i, i + 1});
    if (c.inert() && tag != GroupTag::Gr && k >= 1)
        out.push_back({c.kind == CaseKind::InertEven ? RootForm::TwoA : RootForm::A, k - 1, 0});
    return out;
}

inline std::vector<int> root_vector(const Root& r, int rank) {
    std::vector<int> v(rank, 0);
    switch (r.form) {
        case RootForm::AminusB: v[r.a] = 1; v[r.b] = -1; break;
        case RootForm::AplusB: v[r.a] = 1; v[r.b] = 1; break;
        case RootForm::TwoA: v[r.a] = 2; break;
        case RootForm::A: v[r.a] = 1; break;
    }
    return v;
}

// Sign of a root vector in the ambient system (after a Weyl action the image
// is again +- a non-divisible root).
inline bool root_vector_negative(const std::vector<int>& v) {
    int first = -1, second = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (first == -1) first = static_cast<int>(i);
            else second = static_cast<int>(i);
        }
    }
    if (first == -1) throw std::invalid_argument("zero vector is not a root");
    if (second == -1) return v[first] < 0;
    if (v[first] > 0) return false;              // e_a - e_b (a<b) or e_a + e_b
    return true;                                 // leading coefficient negative
}

// Writes a Weyl image of a non-divisible root as +-(standard form).
inline std::pair<Root, int> classify_root_vector(const std::vector<int>& v) {
    int first = -1, second = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            if (first == -1) first = static_cast<int>(i);
            else second = static_cast<int>(i);
        }
    }
    if (first == -1) throw std::invalid_argument("zero vector is not a root");
    if (second == -1) {
        int a = first, val = v[first];
        if (val == 2) return {{RootForm::TwoA, a, 0}, 1};
        if (val == -2) return {{RootForm::TwoA, a, 0}, -1};
        if (val == 1) return {{RootForm::A, a, 0}, 1};
        if (val == -1) return {{RootForm::A, a, 0}, -1};
        throw std::invalid_argument("not a root vector");
    }
    int a = first, b = second, va = v[first], vb = v[second];
    if (va == 1 && vb == -1) return {{RootForm::AminusB, a, b}, 1};
    if (va == -1 && vb == 1) return {{RootForm::AminusB, a, b}, -1};
    if (va == 1 && vb == 1) return {{RootForm::AplusB, a, b}, 1};
    if (va == -1 && vb == -1) return {{RootForm::AplusB, a, b}, -1};
    throw std::invalid_argument("not a root vector");
}

// <chars, alpha^vee> as a Laurent monomial in the character coordinates.
// The inert-odd short root e_a is paired through the divisible root's
// natural coroot, giving chi_a^2 (pinned by the dual-group determinant
// oracle; see the design notes in README).
template <class S, class InvOp>
S coroot_pairing(const std::vector<S>& chars, const Root& r, InvOp inv) {
    switch (r.form) {
        case RootForm::AminusB: return chars[r.a] * inv(chars[r.b]);
        case RootForm::AplusB: return chars[r.a] * chars[r.b];
        case RootForm::TwoA: return chars[r.a];
        case RootForm::A: return chars[r.a] * chars[r.a];
    }
    throw std::logic_error("unreachable");
}

// --- cocharacter cones ------------------------------------------------------

struct Cocharacter {
    std::vector<int> lambda_V; // length n_minus (split: n)
    std::vector<int> lambda_W; // length m_minus (split: m)
};

inline bool lambda_V_dominant(const CaseDescriptor& c, const std::vector<int>& lam) {
    if (static_cast<int>(lam.size()) != c.n_minus) return false;
    for (size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    if (c.inert() && !lam.empty() && lam.back() < 0) return false;
    return true;
}

// Lambda_W^-: the antidominant cone, realized as { reverse(-mu) : mu in
// Lambda_W^+ }. Split: any weakly decreasing vector; inert: weakly
// decreasing with all entries <= 0.
inline bool lambda_W_minus(const CaseDescriptor& c, const std::vector<int>& lam) {
    if (static_cast<int>(lam.size()) != c.m_minus) return false;
    for (size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    if (c.inert() && !lam.empty() && lam.front() > 0) return false;
    return true;
}

inline bool lambda_in_minus_cone(const CaseDescriptor& c, const Cocharacter& lam) {
    return lambda_V_dominant(c, lam.lambda_V) && lambda_W_minus(c, lam.lambda_W);
}

// lambda_r in Lambda_r^{++}: dominant with nonnegative entries; in the split
// case lambda_r is the pair (a;b), both blocks dominant nonnegative.
inline bool lambda_r_plusplus(const CaseDescriptor& c, const std::vector<int>& lam) {
    const size_t expect = c.split() ? 2 * c.r : c.r;
    if (lam.size() != expect) return false;
    auto dom_nonneg = [](const std::vector<int>& v, size_t lo, size_t hi) {
        for (size_t i = lo; i + 1 < hi; ++i)
            if (v[i] < v[i + 1]) return false;
        return hi == lo || v[hi - 1] >= 0;
    };
    if (c.split()) return dom_nonneg(lam, 0, c.r) && dom_nonneg(lam, c.r, 2 * c.r);
    return dom_nonneg(lam, 0, c.r);
}

// --- dominance order --------------------------------------------------------

// lam1 <= lam2 iff lam2 - lam1 is a nonnegative integer combination of the
// simple coroots of the case.
inline bool dominance_leq(const CaseDescriptor& c, GroupTag tag, const std::vector<int>& lam1,
                          const std::vector<int>& lam2) {
    if (lam1.size() != lam2.size()) throw std::invalid_argument("rank mismatch");
    const int k = static_cast<int>(lam1.size());
    long run = 0;
    for (int i = 0; i < k - 1; ++i) {
        run += lam2[i] - lam1[i];
        if (run < 0) return false;
    }
    if (k > 0) run += lam2[k - 1] - lam1[k - 1];
    const bool typeA = c.split() || tag == GroupTag::Gr;
    if (typeA) return run == 0;
    if (c.kind == CaseKind::InertEven) return run >= 0;                // coroot e_k
    return run >= 0 && run % 2 == 0;                                   // coroot 2 e_k
}

// lambda_X = lambda_V - lambda_W, with lambda_W embedded into the T_V
// coordinates at positions r+1 .. r+m_minus.
inline std::vector<int> project_lambda_X(const CaseDescriptor& c, const Cocharacter& lam) {
    if (!lambda_in_minus_cone(c, lam)) throw std::domain_error("lambda not in the negative cone");
    std::vector<int> out = lam.lambda_V;
    for (int j = 0; j < c.m_minus; ++j) out[c.r + j] -= lam.lambda_W[j];
    return out;
}

} // namespace wsf

#endif
