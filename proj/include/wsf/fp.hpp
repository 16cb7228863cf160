#ifndef WSF_FP_HPP
#define WSF_FP_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace wsf {

// Thrown when a denominator vanishes at a modular evaluation point.
struct SingularPoint : std::runtime_error {
    SingularPoint() : std::runtime_error("singular evaluation point") {}
};

// Arithmetic in F_p for the fixed 62-bit prime 2^62 - 57.
class Fp {
public:
    static constexpr uint64_t P = 4611686018427387847ULL;

    Fp() : v_(0) {}
    Fp(long long x) {
        long long m = x % static_cast<long long>(P);
        if (m < 0) m += P;
        v_ = static_cast<uint64_t>(m);
    }
    static Fp from_raw(uint64_t x) { Fp f; f.v_ = x % P; return f; }

    uint64_t raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        uint64_t s = a.v_ + b.v_;
        if (s >= P) s -= P;
        return from_raw_unchecked(s);
    }
    friend Fp operator-(Fp a, Fp b) {
        uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_;
        return from_raw_unchecked(s);
    }
    Fp operator-() const { return from_raw_unchecked(v_ == 0 ? 0 : P - v_); }
    friend Fp operator*(Fp a, Fp b) {
        return from_raw_unchecked(static_cast<uint64_t>(
            (static_cast<unsigned __int128>(a.v_) * b.v_) % P));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    Fp pow(long long e) const {
        if (v_ == 0) {
            if (e < 0) throw SingularPoint();
            return e == 0 ? Fp(1) : Fp(0);
        }
        Fp base = *this;
        unsigned long long k;
        if (e < 0) { base = inverse(); k = static_cast<unsigned long long>(-e); }
        else k = static_cast<unsigned long long>(e);
        Fp acc(1);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    Fp inverse() const {
        if (v_ == 0) throw SingularPoint();
        return pow_nonneg(P - 2);
    }

    bool operator==(Fp o) const { return v_ == o.v_; }
    bool operator!=(Fp o) const { return v_ != o.v_; }

    static Fp random_unit(std::mt19937_64& rng) {
        std::uniform_int_distribution<uint64_t> d(1, P - 1);
        return from_raw_unchecked(d(rng));
    }

private:
    static Fp from_raw_unchecked(uint64_t x) { Fp f; f.v_ = x; return f; }
    Fp pow_nonneg(uint64_t k) const {
        Fp base = *this, acc(1);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }
    uint64_t v_;
};

} // namespace wsf

#endif
