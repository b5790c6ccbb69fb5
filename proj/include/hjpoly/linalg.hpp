#pragma once

// Exact rational linear algebra: fixed-size vectors/matrices, fraction-free
// (Bareiss) determinant and rank, and hyperplanes through point sets.

#include "hjpoly/rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace hjpoly {

// Fixed-dimension vector; every access is range-checked.
class RVec {
public:
    explicit RVec(std::size_t dim) : e_(dim) {}
    RVec(std::initializer_list<Rat> init) : e_(init) {}
    std::size_t size() const { return e_.size(); }
    const Rat& operator[](std::size_t i) const { return e_.at(i); }
    Rat& operator[](std::size_t i) { return e_.at(i); }
    friend bool operator==(const RVec& a, const RVec& b) = default;

private:
    std::vector<Rat> e_;
};

// Fixed-shape dense matrix; every access is range-checked.
class RMat {
public:
    RMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static RMat from_rows(const std::vector<RVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rat& operator()(std::size_t i, std::size_t j) const { return e_.at(index(i, j)); }
    Rat& operator()(std::size_t i, std::size_t j) { return e_.at(index(i, j)); }

    RMat transposed() const;

    friend bool operator==(const RMat& a, const RMat& b) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> e_;
};

// Exact determinant; throws std::invalid_argument on a non-square matrix.
Rat det(const RMat& m);

// Exact rank via fraction-free elimination with full pivoting.
std::size_t rank(const RMat& m);

// k points in R^d with k <= d+1: true iff the homogenized rows (1, p_i)
// have rank k.
bool affinely_independent(const std::vector<RVec>& points);

// Affine functional c.x + c0 with integer coefficients of content 1; the
// first nonzero entry of c is positive. Evaluation is exact.
class Hyperplane {
public:
    Hyperplane(const Rat& c0, const RVec& coeffs);
    const Rat& constant() const { return c0_; }
    const RVec& coeffs() const { return c_; }
    std::size_t dim() const { return c_.size(); }
    Rat eval(const RVec& p) const;
    friend bool operator==(const Hyperplane& a, const Hyperplane& b) = default;

private:
    Rat c0_;
    RVec c_;
};

// The unique hyperplane through d affinely independent points in R^d;
// throws AffinelyDependentError otherwise.
Hyperplane hyperplane_through(const std::vector<RVec>& points);

// Unnormalized cofactor form (c0, c) of the affine span of d points in R^d,
// up to a positive scale; vanishes on all the points. nullopt when the
// points are affinely dependent. Shared by hyperplane_through and the facet
// enumeration hot loop, where skipping normalization matters.
std::optional<std::pair<Rat, RVec>> affine_span_functional(const std::vector<RVec>& points);

}  // namespace hjpoly
