#ifndef WSF_WEYL_HPP
#define WSF_WEYL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cases.hpp"

namespace wsf {

enum class GroupTag { V, W, Gr };

// Signed permutation (inert V/W) or plain permutation (split, and the
// r-block Weyl group). Acts on tuples by e_i -> signs[i] * e_{perm[i]};
// on character coordinates a sign of -1 inverts the coordinate.
struct WeylElement {
    std::vector<int> perm;  // images, 0-based
    std::vector<int> signs; // +1 / -1, all +1 for plain permutations
    GroupTag tag = GroupTag::V;

    int rank() const { return static_cast<int>(perm.size()); }

    static WeylElement identity(int k, GroupTag tag) {
        WeylElement w;
        w.perm.resize(k);
        std::iota(w.perm.begin(), w.perm.end(), 0);
        w.signs.assign(k, 1);
        w.tag = tag;
        return w;
    }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (perm[i] != i || signs[i] != 1) return false;
        return true;
    }

    // (a*b) acts as: first b, then a.
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("Weyl rank mismatch");
        WeylElement r = a;
        for (int i = 0; i < a.rank(); ++i) {
            r.perm[i] = a.perm[b.perm[i]];
            r.signs[i] = b.signs[i] * a.signs[b.perm[i]];
        }
        return r;
    }

    WeylElement inverse() const {
        WeylElement r = *this;
        for (int i = 0; i < rank(); ++i) {
            r.perm[perm[i]] = i;
            r.signs[perm[i]] = signs[i];
        }
        return r;
    }

    bool operator==(const WeylElement& o) const { return perm == o.perm && signs == o.signs; }
};

namespace detail {
inline bool weyl_signed(const CaseDescriptor& c, GroupTag tag) {
    return c.inert() && tag != GroupTag::Gr;
}
inline int weyl_rank(const CaseDescriptor& c, GroupTag tag) {
    switch (tag) {
        case GroupTag::V: return c.n_minus;
        case GroupTag::W: return c.m_minus;
        case GroupTag::Gr: return c.r;
    }
    return 0;
}
} // namespace detail

// Enumerates the full Weyl group exactly once: k! plain permutations, or
// 2^k k! signed permutations in the inert case. The longest element is
// weyl_longest below.
inline std::vector<WeylElement> weyl_elements(const CaseDescriptor& c, GroupTag tag) {
    const int k = detail::weyl_rank(c, tag);
    const bool with_signs = detail::weyl_signed(c, tag);
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<WeylElement> out;
    do {
        const int nsign = with_signs ? (1 << k) : 1;
        for (int mask = 0; mask < nsign; ++mask) {
            WeylElement w;
            w.perm = p;
            w.signs.assign(k, 1);
            w.tag = tag;
            for (int i = 0; i < k; ++i)
                if (mask & (1 << i)) w.signs[i] = -1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline WeylElement weyl_longest(const CaseDescriptor& c, GroupTag tag) {
    const int k = detail::weyl_rank(c, tag);
    WeylElement w = WeylElement::identity(k, tag);
    if (detail::weyl_signed(c, tag)) {
        w.signs.assign(k, -1);
    } else {
        for (int i = 0; i < k; ++i) w.perm[i] = k - 1 - i;
    }
    return w;
}

// Action on a character tuple: permutes coordinates and inverts those with
// sign -1. S needs *, inverse-via pow(-1) semantics provided by the caller
// through InvOp.
template <class S, class InvOp>
std::vector<S> weyl_act(const WeylElement& w, const std::vector<S>& chars, InvOp inv) {
    if (static_cast<int>(chars.size()) != w.rank())
        throw std::invalid_argument("weyl_act arity mismatch");
    std::vector<S> out(chars.size());
    for (int i = 0; i < w.rank(); ++i)
        out[w.perm[i]] = (w.signs[i] == -1) ? inv(chars[i]) : chars[i];
    return out;
}

// Action on integer cocharacter vectors (signs negate).
inline std::vector<int> weyl_act_cochar(const WeylElement& w, const std::vector<int>& lam) {
    if (static_cast<int>(lam.size()) != w.rank())
        throw std::invalid_argument("weyl_act arity mismatch");
    std::vector<int> out(lam.size());
    for (int i = 0; i < w.rank(); ++i) out[w.perm[i]] = w.signs[i] * lam[i];
    return out;
}

} // namespace wsf

#endif
