#pragma once

// Shared helpers for the test binaries: seeded random generators for exact
// values and small independent oracles (naive determinant, isqrt-based
// square-root brackets) used to cross-check the library implementations.

#include "hjpoly/linalg.hpp"
#include "hjpoly/rat.hpp"
#include "hjpoly/seeded.hpp"
#include "hjpoly/surd.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace testsup {

inline hjpoly::Rat rnd_rat(hjpoly::SeedStream& s, long num_range = 20, long den_range = 9) {
    const long n = static_cast<long>(s.next() % static_cast<std::uint64_t>(2 * num_range + 1)) - num_range;
    const long d = 1 + static_cast<long>(s.next() % static_cast<std::uint64_t>(den_range));
    return hjpoly::Rat(n, d);
}

inline hjpoly::RMat rnd_mat(hjpoly::SeedStream& s, std::size_t rows, std::size_t cols) {
    hjpoly::RMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rnd_rat(s);
    return m;
}

// Cofactor-expansion determinant: independent oracle for the Bareiss path.
inline hjpoly::Rat det_naive(const hjpoly::RMat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return hjpoly::Rat(1);
    if (n == 1) return m(0, 0);
    hjpoly::Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        hjpoly::RMat sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub(i - 1, cj++) = m(i, k);
            }
        }
        const hjpoly::Rat term = m(0, j) * det_naive(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Encloses sqrt(r) for r >= 0: lo <= sqrt(r) <= hi with hi - lo <= 2^-bits.
inline std::pair<hjpoly::Rat, hjpoly::Rat> sqrt_bracket(const hjpoly::Rat& r, unsigned bits) {
    const mpz_class& p = r.num();
    const mpz_class& q = r.den();
    mpz_class n = p * q;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 2 * bits);
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), n.get_mpz_t());
    mpz_class den = q;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return {hjpoly::Rat(t, den), hjpoly::Rat(t + 1, den)};
}

// Interval-arithmetic sign oracle for a + b*sqrt(r). Tightens the bracket
// until the sign is decided; exact zero is detected algebraically.
inline int surd_sign_oracle(const hjpoly::Rat& a, const hjpoly::Rat& b, const hjpoly::Rat& r) {
    using hjpoly::Rat;
    if (b.sign() == 0 || r.sign() == 0) return a.sign();
    if (a.sign() == -b.sign() && a * a == b * b * r) return 0;
    for (unsigned bits = 32; bits <= 256; bits *= 2) {
        auto [lo, hi] = sqrt_bracket(r, bits);
        const Rat vlo = b.sign() >= 0 ? a + b * lo : a + b * hi;
        const Rat vhi = b.sign() >= 0 ? a + b * hi : a + b * lo;
        if (vlo.sign() > 0) return 1;
        if (vhi.sign() < 0) return -1;
        if (vlo.sign() == 0 && vhi.sign() == 0) return 0;
    }
    return 0;  // undecided after 256 bits: value is exactly zero for test inputs
}

}  // namespace testsup
