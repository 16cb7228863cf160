#ifndef WSF_LAURENT_HPP
#define WSF_LAURENT_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace wsf {

// Exponent vector over the ambient variable set. Entries may be negative.
using Expo = std::vector<int>;

// Graded lexicographic order over the fixed variable order.
// Total degree first, then the first differing coordinate decides.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero; all exponent vectors have the
// ambient arity.
class LaurentPoly {
public:
    using TermMap = std::map<Expo, Rat, GrlexLess>;

    LaurentPoly() : arity_(0) {}
    explicit LaurentPoly(int arity) : arity_(arity) {}

    static LaurentPoly zero(int arity) { return LaurentPoly(arity); }

    static LaurentPoly constant(int arity, const Rat& c) {
        LaurentPoly p(arity);
        if (c != 0) p.terms_.emplace(Expo(arity, 0), c);
        return p;
    }

    static LaurentPoly variable(int arity, int index, int power = 1) {
        if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
        LaurentPoly p(arity);
        Expo e(arity, 0);
        e[index] = power;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    static LaurentPoly monomial(int arity, const Expo& e, const Rat& c) {
        if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("exponent arity mismatch");
        LaurentPoly p(arity);
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Expo& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool is_monomial() const { return terms_.size() == 1; }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        return terms_.begin()->second;
    }

    // Leading term under grlex.
    const std::pair<const Expo, Rat>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    void add_term(const Expo& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        check_arity(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        check_arity(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        check_arity(a, b);
        LaurentPoly r(a.arity_);
        if (a.is_zero() || b.is_zero()) return r;
        Expo e(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly r(arity_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    LaurentPoly shifted(const Expo& s) const {
        LaurentPoly r(arity_);
        Expo e(arity_);
        for (const auto& [ea, c] : terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + s[i];
            r.terms_.emplace(e, c);
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Componentwise minimum of exponent vectors over all terms.
    Expo min_exponents() const {
        Expo m(arity_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first) { m = e; first = false; continue; }
            for (int i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) { (void)c; d = std::max(d, e[var]); }
        return d;
    }

    bool depends_on(int var) const {
        for (const auto& [e, c] : terms_) { (void)c; if (e[var] != 0) return true; }
        return false;
    }

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients. Zero polynomial has content 1.
    Rat content() const {
        if (terms_.empty()) return Rat(1);
        Int g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            (void)e;
            g = int_gcd(g, boost::multiprecision::abs(rat_num(c)));
            l = int_lcm(l, rat_den(c));
        }
        return Rat(g, l);
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    static void check_arity(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

// --- exact division -------------------------------------------------------

// Attempts exact division a / b. Returns nullopt when b does not divide a.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    LaurentPoly rem = a, quot(a.arity());
    const Expo blead_e = b.leading().first;
    const Rat blead_c = b.leading().second;
    GrlexLess less;
    while (!rem.is_zero()) {
        Expo rlead_e = rem.leading().first;
        Rat rlead_c = rem.leading().second;
        Expo q(a.arity());
        for (int i = 0; i < a.arity(); ++i) q[i] = rlead_e[i] - blead_e[i];
        LaurentPoly t = LaurentPoly::monomial(a.arity(), q, rlead_c / blead_c);
        quot = quot + t;
        rem = rem - t * b;
        if (!rem.is_zero() && !less(rem.leading().first, rlead_e)) return std::nullopt;
    }
    return quot;
}

// --- multivariate gcd (primitive PRS) --------------------------------------

namespace detail {

inline LaurentPoly gcd_impl(const LaurentPoly& a, const LaurentPoly& b);

// View p as a univariate polynomial in `var`: degree -> coefficient with the
// var-slot zeroed out.
inline std::map<int, LaurentPoly> split_by_var(const LaurentPoly& p, int var) {
    std::map<int, LaurentPoly> out;
    for (const auto& [e, c] : p.terms()) {
        Expo e2 = e;
        int d = e2[var];
        e2[var] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, LaurentPoly(p.arity())).first;
        it->second.add_term(e2, c);
    }
    return out;
}

// gcd of the coefficients of p viewed in `var`.
inline LaurentPoly poly_content(const LaurentPoly& p, int var) {
    auto coeffs = split_by_var(p, var);
    LaurentPoly g(p.arity());
    for (const auto& [d, c] : coeffs) {
        (void)d;
        g = gcd_impl(g, c);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder prem(a,b) = lc(b)^(da-db+1) * a mod b in variable var;
// requires deg_var(a) >= deg_var(b).
inline LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b, int var) {
    auto bs = split_by_var(b, var);
    const int db = bs.rbegin()->first;
    const LaurentPoly lcb = bs.rbegin()->second;
    const int da = a.is_zero() ? -1 : split_by_var(a, var).rbegin()->first;
    LaurentPoly rem = a;
    int scale_left = da - db + 1;
    while (true) {
        if (rem.is_zero()) break;
        auto rs = split_by_var(rem, var);
        int dr = rs.rbegin()->first;
        if (dr < db) break;
        LaurentPoly lcr = rs.rbegin()->second;
        Expo s(a.arity(), 0);
        s[var] = dr - db;
        rem = lcb * rem - (lcr * b).shifted(s);
        --scale_left;
    }
    // pad so that the full lc(b)^(delta+1) scaling is applied (subresultant
    // divisions below rely on it)
    for (int i = 0; i < scale_left; ++i) rem = rem * lcb;
    return rem;
}

// Monomial/common-factor gcd: min exponent per variable over both supports.
inline LaurentPoly support_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    Expo g = a.min_exponents();
    const Expo mb = b.min_exponents();
    for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], mb[i]);
    return LaurentPoly::monomial(a.arity(), g, Rat(1));
}

// gcd of two ordinary (nonnegative-exponent) polynomials, up to a unit.
// Subresultant PRS (Brown-Traub) in the chosen variable, recursing on the
// coefficient ring for contents.
inline LaurentPoly gcd_impl(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_monomial() || b.is_monomial()) return support_gcd(a, b);

    int var = -1;
    for (int i = 0; i < a.arity(); ++i) {
        if (a.depends_on(i) && b.depends_on(i)) {
            if (var == -1 || std::max(a.degree_in(i), b.degree_in(i)) <
                                 std::max(a.degree_in(var), b.degree_in(var)))
                var = i;
        }
    }
    if (var == -1) return support_gcd(a, b);

    LaurentPoly ca = poly_content(a, var);
    LaurentPoly cb = poly_content(b, var);
    LaurentPoly cg = gcd_impl(ca, cb);

    LaurentPoly pa = *try_divide(a, ca);
    LaurentPoly pb = *try_divide(b, cb);
    if (split_by_var(pa, var).rbegin()->first < split_by_var(pb, var).rbegin()->first)
        std::swap(pa, pb);

    const int arity = a.arity();
    LaurentPoly g = LaurentPoly::constant(arity, 1);
    LaurentPoly h = LaurentPoly::constant(arity, 1);
    while (true) {
        auto pas = split_by_var(pa, var);
        auto pbs = split_by_var(pb, var);
        const int delta = pas.rbegin()->first - pbs.rbegin()->first;
        LaurentPoly r = pseudo_rem(pa, pb, var);
        if (r.is_zero()) {
            LaurentPoly pp = *try_divide(pb, poly_content(pb, var));
            return cg * pp;
        }
        if (split_by_var(r, var).rbegin()->first == 0) return cg;
        pa = pb;
        // b_{i+1} = r / (g h^delta), exact by subresultant theory
        LaurentPoly div = g;
        for (int i = 0; i < delta; ++i) div = div * h;
        pb = *try_divide(r, div);
        g = split_by_var(pa, var).rbegin()->second;
        if (delta >= 1) {
            LaurentPoly gd = LaurentPoly::constant(arity, 1);
            for (int i = 0; i < delta; ++i) gd = gd * g;
            LaurentPoly hd = LaurentPoly::constant(arity, 1);
            for (int i = 0; i + 1 < delta; ++i) hd = hd * h;
            h = *try_divide(gd, hd);
        }
    }
}

} // namespace detail

// gcd over the Laurent ring. Inputs are shifted to ordinary polynomials; the
// result has nonnegative minimized exponents, integer-primitive coefficients
// and positive leading coefficient.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    auto clear = [](const LaurentPoly& p) {
        if (p.is_zero()) return p;
        Expo m = p.min_exponents();
        for (auto& e : m) e = -e;
        return p.shifted(m);
    };
    LaurentPoly g = detail::gcd_impl(clear(a), clear(b));
    if (g.is_zero()) return g;
    Expo m = g.min_exponents();
    for (auto& e : m) e = -e;
    g = g.shifted(m);
    g = g.scaled(Rat(1) / g.content());
    if (g.leading().second < 0) g = g.scaled(Rat(-1));
    return g;
}

inline std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = c >= 0 ? c : Rat(-c);
        bool allzero = std::all_of(it->first.begin(), it->first.end(), [](int x) { return x == 0; });
        if (ac != 1 || allzero) os << ac.str();
        bool needstar = (ac != 1);
        for (size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (needstar) os << "*";
            os << names[i];
            if (e != 1) os << "^" << e;
            needstar = true;
        }
    }
    return os.str();
}

} // namespace wsf

#endif
