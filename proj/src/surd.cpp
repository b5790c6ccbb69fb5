#include "hjpoly/surd.hpp"

#include <stdexcept>

namespace hjpoly {

std::optional<Rat> rational_sqrt(const Rat& r) {
    const int s = r.sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return Rat(0);
    // A canonical p/q is a rational square iff p and q are integer squares.
    if (!mpz_perfect_square_p(r.num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(r.den().get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), r.den().get_mpz_t());
    return Rat(sn, sd);
}

Surd::Surd(Rat a, Rat b, Rat r) : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {
    if (r_.sign() < 0) throw std::domain_error("Surd: negative radicand");
    normalize();
}

void Surd::normalize() {
    if (b_.is_zero()) {
        r_ = Rat(0);
        return;
    }
    if (r_.is_zero()) {
        b_ = Rat(0);
        return;
    }
    if (auto root = rational_sqrt(r_)) {
        a_ += b_ * *root;
        b_ = Rat(0);
        r_ = Rat(0);
    }
}

const Rat& Surd::rational_value() const {
    if (!is_rational()) throw std::logic_error("Surd: irrational value has no rational_value");
    return a_;
}

int Surd::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(r) compares as a^2 vs b^2*r.
    const Rat lhs = a_ * a_;
    const Rat rhs = b_ * b_ * r_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

Surd Surd::operator-() const {
    Surd s;
    s.a_ = -a_;
    s.b_ = -b_;
    s.r_ = r_;
    return s;
}

Surd operator+(const Surd& a, const Surd& b) {
    if (b.is_rational()) {
        Surd s = a;
        s.a_ += b.a_;
        return s;
    }
    if (a.is_rational()) {
        Surd s = b;
        s.a_ += a.a_;
        return s;
    }
    if (a.r_ != b.r_) throw std::domain_error("Surd: mixed radicands in addition");
    Surd s;
    s.a_ = a.a_ + b.a_;
    s.b_ = a.b_ + b.b_;
    s.r_ = a.r_;
    s.normalize();
    return s;
}

Surd operator*(const Surd& a, const Surd& b) {
    if (b.is_rational()) {
        Surd s;
        s.a_ = a.a_ * b.a_;
        s.b_ = a.b_ * b.a_;
        s.r_ = a.r_;
        s.normalize();
        return s;
    }
    if (a.is_rational()) return b * a;
    if (a.r_ != b.r_) throw std::domain_error("Surd: mixed radicands in multiplication");
    Surd s;
    s.a_ = a.a_ * b.a_ + a.b_ * b.b_ * a.r_;
    s.b_ = a.a_ * b.b_ + a.b_ * b.a_;
    s.r_ = a.r_;
    s.normalize();
    return s;
}

std::string Surd::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt(" + r_.str() + ")";
}

}  // namespace hjpoly
