#pragma once

// Exact rational scalar backed by GMP. Values stay canonical at all times:
// gcd(|num|, den) = 1, den > 0, and zero is 0/1.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

namespace hjpoly {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) { init(mpz_class(n), mpz_class(d)); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) { init(n, d); }

    // Parses base-10 "p" or "p/q".
    static Rat from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical serialization: "p" when the denominator is 1, else "p/q".
    std::string str() const;

private:
    void init(const mpz_class& n, const mpz_class& d);
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// numerator / 2^bits
Rat dyadic(const mpz_class& numerator, unsigned bits);

mpz_class pow_mpz(unsigned long base, unsigned long exp);

}  // namespace hjpoly
