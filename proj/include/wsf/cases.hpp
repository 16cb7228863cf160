#ifndef WSF_CASES_HPP
#define WSF_CASES_HPP

#include <stdexcept>
#include <string>

namespace wsf {

enum class CaseKind { Split, InertEven, InertOdd };

enum class FieldKind { Split, Inert };

// Which of {split, inert-even, inert-odd} together with (n, m, r) and the
// derived split ranks.
struct CaseDescriptor {
    CaseKind kind;
    int n = 0, m = 0, r = 0, rprime = 0;
    int n_minus = 0, n_plus = 0, m_minus = 0, m_plus = 0;

    bool split() const { return kind == CaseKind::Split; }
    bool inert() const { return kind != CaseKind::Split; }

    // Number of chi (resp. eta) coordinates of an unramified character.
    int chi_rank() const { return n_minus; }
    int eta_rank() const { return m_minus; }

    std::string name() const {
        std::string k = split() ? "split" : (kind == CaseKind::InertEven ? "inert-even" : "inert-odd");
        return k + "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
    }
};

inline CaseDescriptor build_case(FieldKind field, int n, int m) {
    if (n < m || m < 0 || (n - m) % 2 != 0) throw std::invalid_argument("invalid corank");
    CaseDescriptor c;
    c.n = n;
    c.m = m;
    c.r = (n - m) / 2;
    c.rprime = m + c.r;
    if (field == FieldKind::Split) {
        c.kind = CaseKind::Split;
        c.n_minus = c.n_plus = n;
        c.m_minus = c.m_plus = m;
    } else {
        c.kind = (n % 2 == 0) ? CaseKind::InertEven : CaseKind::InertOdd;
        c.n_minus = n / 2;
        c.m_minus = m / 2;
        if (n % 2 == 0) {
            c.n_plus = c.n_minus;
            c.m_plus = c.m_minus;
        } else {
            c.n_plus = c.n_minus + 1;
            c.m_plus = c.m_minus + 1;
        }
    }
    return c;
}

} // namespace wsf

#endif
