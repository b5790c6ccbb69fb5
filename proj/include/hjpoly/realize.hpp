#pragma once

// Geometric realization stages, all over exact arithmetic:
//   1. base_drawing     — planar points p = sum sigma_i * v_i whose collinear
//                         triples along combinatorial lines are exactly the
//                         intended ones (verified, jitter-and-retry on failure)
//   2. choose_epsilon   — a rational eps > 0 small enough that the conic value
//                         (y - a x - b)^2 - eps*x is positive off every line
//   3. surd_perturb     — y := y + sqrt(eps * x), one square root per point
//   4. snap             — round the surd coordinates to dyadics at a given
//                         precision, with optional injective jitter
//   5. veronese         — (x, y) -> (x^2, xy, y^2, x, y)
//   6. lift             — append d-5 seeded dyadic coordinates and verify that
//                         every line's d points stay affinely independent

#include "hjpoly/hj.hpp"
#include "hjpoly/linalg.hpp"
#include "hjpoly/rat.hpp"
#include "hjpoly/surd.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hjpoly {

struct DrawingConfig {
    int d = 5;
    int n = 2;
    std::uint64_t seed = 1;
    std::optional<Rat> epsilon_override;
    unsigned precision_bits = 64;      // starting snap precision
    unsigned max_precision_bits = 2048;
    bool jitter = true;
    std::size_t line_cap = kDefaultLineCap;
};

struct LineGeom {
    LinePattern pattern;
    Rat slope;
    Rat intercept;
    std::vector<std::uint32_t> members;  // sorted word indices
};

// Exact planar drawing of [d]^n; points are indexed by word rank.
struct PlanarDrawing {
    int d = 0;
    int n = 0;
    std::vector<std::pair<Rat, Rat>> vectors;  // v_1..v_n, all x-parts > 0
    std::vector<std::pair<Rat, Rat>> points;
    std::vector<LineGeom> lines;
};

// Builds points and line data from given letter vectors and verifies both
// drawing conditions exactly: distinct points with positive x, and for every
// line, the points on its supporting planar line are exactly its members.
// Throws std::invalid_argument for malformed vectors, RetriesExhaustedError
// never (no retries here; see base_drawing).
PlanarDrawing drawing_from_vectors(int d, int n, const std::vector<std::pair<Rat, Rat>>& vectors,
                                   std::size_t line_cap = kDefaultLineCap);

// Default vectors v_i = (1, (d+1)^i); on a verification failure retries with
// seeded jitter on the y-parts (when cfg.jitter), up to 32 times.
PlanarDrawing base_drawing(const DrawingConfig& cfg);

// Largest safe perturbation size: min(1, min over lines L and points q off L
// with negative residual delta of delta^2 / (8 x_q)). Always positive.
Rat choose_epsilon(const PlanarDrawing& dr);

struct SurdPoint {
    Rat x;
    Surd y;
};

struct SurdConfiguration {
    int d = 0;
    int n = 0;
    Rat epsilon;
    std::vector<LineGeom> lines;  // carried through from the drawing
    std::vector<SurdPoint> points;
};

// Applies (x, y) -> (x, y + sqrt(eps * x)). Requires eps > 0.
SurdConfiguration surd_perturb(const PlanarDrawing& dr, const Rat& epsilon);

// residual y - a x - b of a perturbed point against a line's planar support
Surd line_residual(const SurdPoint& p, const LineGeom& line);
// conic value (y - a x - b)^2 - eps * x of a perturbed point
Surd line_conic_value(const SurdPoint& p, const LineGeom& line, const Rat& epsilon);

// Verifies the two-sided support property of the perturbed configuration:
// the conic value of every line vanishes exactly on its members and is
// strictly positive elsewhere. Throws NotSupportingError on violation.
void verify_surd_support(const SurdConfiguration& sc);

struct PlanarPoint {
    Rat x;
    Rat y;
};

// Rounds each point to denominator 2^precision_bits: exact when the surd is
// rational, else within 2^-precision_bits. With jitter enabled, adds pairwise
// distinct dyadic offsets below 2^-(precision_bits+8) to both coordinates.
std::vector<PlanarPoint> snap(const SurdConfiguration& sc, unsigned precision_bits,
                              std::uint64_t seed, bool jitter, unsigned attempt = 0);

// (x, y) -> (x^2, xy, y^2, x, y)
RVec veronese(const Rat& x, const Rat& y);

// True iff for every line, its member points are affinely independent.
bool lines_affinely_independent(const std::vector<RVec>& points,
                                const std::vector<LineGeom>& lines);

// Appends d-5 seeded dyadic coordinates of magnitude < 2^-8 to each point and
// verifies every line's member set is affinely independent in R^d; retries
// with fresh draws up to 32 times, then throws RetriesExhaustedError.
std::vector<RVec> lift(const std::vector<RVec>& points, int d, std::uint64_t seed,
                       unsigned precision_bits, const std::vector<LineGeom>& lines);

// A realized point configuration in R^d whose first five coordinates are the
// degree-two monomial embedding of the planar snap.
struct Realization {
    int d = 0;
    int n = 0;
    Rat epsilon;
    unsigned precision_bits = 0;
    std::uint64_t seed = 0;
    std::vector<RVec> coordinates;   // indexed by word rank
    std::vector<LineGeom> lines;
};

// Structural invariants: dimensions, coordinate consistency with the planar
// projection, pairwise distinct planar points, full-dimensional affine span.
void validate_realization(const Realization& real);

// Planar projection of point i: (coordinates[i][3], coordinates[i][4]).
PlanarPoint planar_point(const Realization& real, std::size_t i);

}  // namespace hjpoly
