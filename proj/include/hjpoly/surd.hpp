#pragma once

// Exact value a + b*sqrt(r) with rational a, b and radicand r >= 0.
// A value carries a single radicand; adding or multiplying values with
// different irrational radicands is rejected. Perfect-square radicands
// collapse into the rational part on construction, so is_rational() is
// decidable and sign() reduces to rational comparisons.

#include "hjpoly/rat.hpp"

#include <optional>
#include <string>

namespace hjpoly {

class Surd {
public:
    Surd() = default;
    Surd(const Rat& a) : a_(a) {}
    Surd(int a) : a_(a) {}
    Surd(Rat a, Rat b, Rat r);

    const Rat& rational_part() const { return a_; }
    const Rat& root_coefficient() const { return b_; }
    const Rat& radicand() const { return r_; }

    bool is_rational() const { return b_.is_zero(); }
    // Only valid when is_rational().
    const Rat& rational_value() const;

    int sign() const;

    Surd operator-() const;
    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
    friend Surd operator*(const Surd& a, const Surd& b);
    Surd square() const { return *this * *this; }

    friend bool operator==(const Surd& a, const Surd& b) = default;

    std::string str() const;

private:
    void normalize();
    Rat a_{0};
    Rat b_{0};
    Rat r_{0};
};

inline int surd_sign(const Surd& s) { return s.sign(); }

// Exact square root of a nonnegative rational, when it is itself rational.
std::optional<Rat> rational_sqrt(const Rat& r);

}  // namespace hjpoly
