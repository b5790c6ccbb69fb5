#include "hjpoly/linalg.hpp"

#include "hjpoly/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace hjpoly {
namespace {

using ZRow = std::vector<mpz_class>;
using ZMat = std::vector<ZRow>;

// Clears denominators row by row (each row scaled by a positive integer).
// When denom_product is non-null it accumulates the product of the scales.
ZMat integer_rows(const RMat& m, mpz_class* denom_product) {
    ZMat z(m.rows(), ZRow(m.cols()));
    mpz_class scale, t;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& e = m(i, j);
            mpz_divexact(t.get_mpz_t(), scale.get_mpz_t(), e.den().get_mpz_t());
            z[i][j] = e.num() * t;
        }
        if (denom_product) *denom_product *= scale;
    }
    return z;
}

// Destructive fraction-free determinant of a square integer matrix.
mpz_class zdet(ZMat& z) {
    const std::size_t n = z.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev(1), t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && z[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(z[piv], z[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = z[k][k] * z[i][j] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    return sign < 0 ? mpz_class(-z[n - 1][n - 1]) : z[n - 1][n - 1];
}

std::size_t zrank(ZMat& z) {
    if (z.empty() || z[0].empty()) return 0;
    const std::size_t rows = z.size();
    const std::size_t cols = z[0].size();
    std::size_t r = 0;
    mpz_class prev(1), t;
    while (r < rows && r < cols) {
        std::size_t pi = rows;
        std::size_t pj = cols;
        for (std::size_t j = r; j < cols && pi == rows; ++j) {
            for (std::size_t i = r; i < rows; ++i) {
                if (z[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == rows) break;
        if (pi != r) std::swap(z[pi], z[r]);
        if (pj != r)
            for (auto& row : z) std::swap(row[pj], row[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j) {
                t = z[r][r] * z[i][j] - z[i][r] * z[r][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][r] = 0;
        }
        prev = z[r][r];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t RMat::index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RMat: index out of range");
    return i * cols_ + j;
}

RMat RMat::from_rows(const std::vector<RVec>& rows) {
    if (rows.empty()) return RMat(0, 0);
    const std::size_t cols = rows[0].size();
    RMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("RMat: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RMat RMat::transposed() const {
    RMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rat det(const RMat& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix must be square");
    if (m.rows() == 0) return Rat(1);
    mpz_class denom(1);
    ZMat z = integer_rows(m, &denom);
    return Rat(zdet(z), denom);
}

std::size_t rank(const RMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    ZMat z = integer_rows(m, nullptr);
    return zrank(z);
}

bool affinely_independent(const std::vector<RVec>& points) {
    if (points.empty()) return true;
    const std::size_t d = points[0].size();
    if (points.size() > d + 1)
        throw std::invalid_argument("affinely_independent: more than d+1 points");
    RMat m(points.size(), d + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != d)
            throw std::invalid_argument("affinely_independent: mixed dimensions");
        m(i, 0) = Rat(1);
        for (std::size_t j = 0; j < d; ++j) m(i, j + 1) = points[i][j];
    }
    return rank(m) == points.size();
}

Hyperplane::Hyperplane(const Rat& c0, const RVec& coeffs) : c0_(c0), c_(coeffs) {
    bool nonzero = false;
    for (std::size_t j = 0; j < c_.size(); ++j) nonzero = nonzero || !c_[j].is_zero();
    if (!nonzero) throw std::invalid_argument("Hyperplane: zero coefficient vector");

    mpz_class scale(1);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c0_.den().get_mpz_t());
    for (std::size_t j = 0; j < c_.size(); ++j)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c_[j].den().get_mpz_t());

    std::vector<mpz_class> ints(c_.size() + 1);
    mpz_class t;
    auto to_int = [&](const Rat& r) {
        mpz_divexact(t.get_mpz_t(), scale.get_mpz_t(), r.den().get_mpz_t());
        return mpz_class(r.num() * t);
    };
    ints[0] = to_int(c0_);
    for (std::size_t j = 0; j < c_.size(); ++j) ints[j + 1] = to_int(c_[j]);

    mpz_class g(0);
    for (const auto& v : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());

    int lead = 0;
    for (std::size_t j = 1; j < ints.size() && lead == 0; ++j) lead = sgn(ints[j]);
    if (lead < 0)
        for (auto& v : ints) v = -v;

    c0_ = Rat(ints[0]);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = Rat(ints[j + 1]);
}

Rat Hyperplane::eval(const RVec& p) const {
    if (p.size() != c_.size()) throw std::invalid_argument("Hyperplane: dimension mismatch");
    Rat acc = c0_;
    for (std::size_t j = 0; j < c_.size(); ++j) acc += c_[j] * p[j];
    return acc;
}

std::optional<std::pair<Rat, RVec>> affine_span_functional(const std::vector<RVec>& points) {
    if (points.empty()) throw std::invalid_argument("affine_span_functional: no points");
    const std::size_t d = points[0].size();
    if (points.size() != d)
        throw std::invalid_argument("affine_span_functional: need exactly d points in R^d");
    if (d < 2) throw std::invalid_argument("affine_span_functional: dimension must be >= 2");

    // Homogenized rows (1, p_i), cleared to integers. Scaling a row scales
    // every cofactor below by the same positive factor, which is harmless:
    // the functional is only defined up to positive scale.
    ZMat rows(d, ZRow(d + 1));
    mpz_class scale, t;
    for (std::size_t i = 0; i < d; ++i) {
        if (points[i].size() != d)
            throw std::invalid_argument("affine_span_functional: mixed dimensions");
        scale = 1;
        for (std::size_t j = 0; j < d; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), points[i][j].den().get_mpz_t());
        rows[i][0] = scale;
        for (std::size_t j = 0; j < d; ++j) {
            const Rat& e = points[i][j];
            mpz_divexact(t.get_mpz_t(), scale.get_mpz_t(), e.den().get_mpz_t());
            rows[i][j + 1] = e.num() * t;
        }
    }

    // Cofactor expansion of det(1, x; rows) along the unknown first row:
    // c0 = M_0 and c_j = (-1)^j M_j, where M_j drops column j.
    std::vector<mpz_class> cof(d + 1);
    ZMat minor(d, ZRow(d));
    for (std::size_t drop = 0; drop <= d; ++drop) {
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j <= d; ++j) {
                if (j == drop) continue;
                minor[i][cj++] = rows[i][j];
            }
        }
        cof[drop] = zdet(minor);
        if (drop % 2 == 1) cof[drop] = -cof[drop];
    }

    bool nonzero = false;
    for (std::size_t j = 1; j <= d && !nonzero; ++j) nonzero = sgn(cof[j]) != 0;
    if (!nonzero) return std::nullopt;

    RVec c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = Rat(cof[j + 1]);
    return std::make_pair(Rat(cof[0]), std::move(c));
}

Hyperplane hyperplane_through(const std::vector<RVec>& points) {
    auto f = affine_span_functional(points);
    if (!f) {
        std::ostringstream os;
        os << "hyperplane_through: " << points.size() << " affinely dependent points";
        throw AffinelyDependentError(os.str());
    }
    return Hyperplane(f->first, f->second);
}

}  // namespace hjpoly
