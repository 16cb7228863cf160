#ifndef WSF_MODULAR_HPP
#define WSF_MODULAR_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fp.hpp"
#include "ratfunc.hpp"

namespace wsf {

inline Fp fp_of_rat(const Rat& c) {
    auto reduce = [](Int x) {
        Int m = x % Int(Fp::P);
        if (m < 0) m += Int(Fp::P);
        return Fp::from_raw(static_cast<uint64_t>(m));
    };
    return reduce(rat_num(c)) / reduce(rat_den(c));
}

inline Fp eval_mod(const LaurentPoly& p, const std::vector<Fp>& point) {
    Fp acc(0);
    for (const auto& [e, c] : p.terms()) {
        Fp t = fp_of_rat(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

// Exact evaluation in F_p; throws SingularPoint when the denominator
// vanishes at the point (caller retries with a fresh point).
inline Fp rf_eval_mod(const RatFunc& f, const std::vector<Fp>& point) {
    Fp d = eval_mod(f.den(), point);
    if (d.is_zero()) throw SingularPoint();
    return eval_mod(f.num(), point) / d;
}

enum class EqualMode { Symbolic, Modular };

struct EqualReport {
    bool equal = false;
    EqualMode mode = EqualMode::Symbolic;
    int trials = 0;
    uint64_t prime = Fp::P;
    uint64_t seed = 0;
    std::string detail;
};

// Certifies lhs == rhs. Symbolic mode cross-multiplies and compares exact
// polynomials; modular mode tests `trials` uniform random points with
// Schwartz-Zippel soundness. Singular points are resampled.
inline EqualReport rf_identity_equal(const RatFunc& lhs, const RatFunc& rhs,
                                     EqualMode mode = EqualMode::Symbolic,
                                     int trials = 20, uint64_t seed = 1) {
    EqualReport rep;
    rep.mode = mode;
    rep.seed = seed;
    if (mode == EqualMode::Symbolic) {
        rep.equal = (lhs.num() * rhs.den()) == (rhs.num() * lhs.den());
        rep.detail = rep.equal ? "canonical cross-products identical"
                               : "canonical cross-products differ";
        return rep;
    }
    std::mt19937_64 rng(seed);
    int done = 0, resamples = 0;
    while (done < trials) {
        std::vector<Fp> pt(lhs.arity());
        for (auto& x : pt) x = Fp::random_unit(rng);
        try {
            Fp a = rf_eval_mod(lhs, pt);
            Fp b = rf_eval_mod(rhs, pt);
            if (a != b) {
                rep.equal = false;
                rep.trials = done + 1;
                rep.detail = "mismatch at trial " + std::to_string(done + 1);
                return rep;
            }
            ++done;
        } catch (const SingularPoint&) {
            if (++resamples > 1000) throw;
        }
    }
    rep.equal = true;
    rep.trials = trials;
    rep.detail = "agreed on all trials";
    return rep;
}

} // namespace wsf

#endif
