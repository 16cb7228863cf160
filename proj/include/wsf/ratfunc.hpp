#ifndef WSF_RATFUNC_HPP
#define WSF_RATFUNC_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace wsf {

// Exact multivariate Laurent rational function, kept in canonical form:
//   - gcd(numerator, denominator) is a unit
//   - numerator and denominator are ordinary polynomials with integer
//     coefficients, jointly minimized nonnegative exponents
//   - contents of numerator and denominator are coprime integers and the
//     denominator's leading coefficient is positive
class RatFunc {
public:
    RatFunc() : num_(0), den_(0) {}

    explicit RatFunc(int arity)
        : num_(LaurentPoly::zero(arity)), den_(LaurentPoly::constant(arity, 1)) {}

    RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        normalize();
    }

    explicit RatFunc(const LaurentPoly& num)
        : num_(num), den_(LaurentPoly::constant(num.arity(), 1)) {
        normalize();
    }

    static RatFunc zero(int arity) { return RatFunc(arity); }
    static RatFunc constant(int arity, const Rat& c) {
        return RatFunc(LaurentPoly::constant(arity, c));
    }
    static RatFunc one(int arity) { return constant(arity, 1); }
    static RatFunc variable(int arity, int index, int power = 1) {
        return RatFunc(LaurentPoly::variable(arity, index, power));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int arity() const { return num_.arity(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    // True when the canonical denominator is a nonzero constant.
    bool is_polynomial() const { return den_.is_constant(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e == 0) return one(arity());
        RatFunc base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
        RatFunc acc = one(arity());
        while (k) {
            if (k & 1) acc *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return acc;
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Substitutes values[i] for variable i. Values live over an arbitrary
    // target arity; per-variable powers are cached by the caller loop.
    RatFunc substitute(const std::vector<RatFunc>& values) const {
        if (static_cast<int>(values.size()) != arity())
            throw std::invalid_argument("substitution arity mismatch");
        RatFunc n = eval_poly(num_, values);
        RatFunc d = eval_poly(den_, values);
        return n / d;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (is_polynomial()) {
            if (den_.constant_value() == 1) return num_.to_string(names);
            return "(" + num_.to_string(names) + ") / " + den_.to_string(names);
        }
        return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
    }

private:
    static RatFunc eval_poly(const LaurentPoly& p, const std::vector<RatFunc>& values) {
        int target = values.empty() ? 0 : values[0].arity();
        RatFunc acc = RatFunc::zero(target);
        for (const auto& [e, c] : p.terms()) {
            RatFunc t = RatFunc::constant(target, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= values[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(arityOf(), 1);
            return;
        }
        // joint Laurent clearing: shift both by -min over the union of supports
        Expo mn = num_.min_exponents();
        Expo md = den_.min_exponents();
        Expo s(mn.size());
        for (size_t i = 0; i < s.size(); ++i) s[i] = -std::min(mn[i], md[i]);
        num_ = num_.shifted(s);
        den_ = den_.shifted(s);

        LaurentPoly g = laurent_gcd(num_, den_);
        if (!(g.is_monomial() && g.is_constant())) {
            num_ = *try_divide(num_, g);
            den_ = *try_divide(den_, g);
        }
        // after division the common monomial part is gone as well; re-clear
        mn = num_.min_exponents();
        md = den_.min_exponents();
        for (size_t i = 0; i < s.size(); ++i) s[i] = -std::min(mn[i], md[i]);
        num_ = num_.shifted(s);
        den_ = den_.shifted(s);

        // integer-primitive scaling with coprime contents, positive den lead
        Rat cn = num_.content();
        Rat cd = den_.content();
        Rat ratio = cn / cd; // = p/q in lowest terms
        num_ = num_.scaled(Rat(rat_num(ratio)) / cn);
        den_ = den_.scaled(Rat(rat_den(ratio)) / cd);
        if (den_.leading().second < 0) {
            num_ = num_.scaled(Rat(-1));
            den_ = den_.scaled(Rat(-1));
        }
    }

    int arityOf() const { return num_.arity(); }

    LaurentPoly num_, den_;
};

// Spec-level entry point: canonicalize a raw fraction.
inline RatFunc rf_normalize(const LaurentPoly& raw_num, const LaurentPoly& raw_den) {
    return RatFunc(raw_num, raw_den);
}

} // namespace wsf

#endif
