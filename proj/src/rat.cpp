#include "hjpoly/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace hjpoly {

void Rat::init(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    mpq_class q;
    try {
        q = mpq_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: malformed rational '" + s + "'");
    }
    if (sgn(q.get_den()) == 0) throw std::domain_error("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    Rat r;
    r.v_ = std::move(q);
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat dyadic(const mpz_class& numerator, unsigned bits) {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return Rat(numerator, den);
}

mpz_class pow_mpz(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace hjpoly
